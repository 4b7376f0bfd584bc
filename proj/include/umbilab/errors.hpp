#pragma once

#include <stdexcept>
#include <string>

namespace umb {

// Bad sizes, out-of-range parameters, violated preconditions.
struct invalid_input : std::invalid_argument {
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Breakdown detected at run time: loss of positivity, non-convergence,
// degenerate metric.  Signals under-resolution or a genuine blow-up.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace umb
