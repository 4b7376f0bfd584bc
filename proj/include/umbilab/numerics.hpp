#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace umb {

// Fixed-order pairwise summation.  All quadrature reductions go through this
// so results do not depend on traversal or threading details.
double pairwise_sum(std::span<const double> x);

// Minimize a unimodal function on [a, b] by golden-section search; returns the
// abscissa of the minimum with |x - x*| <= tol.
double golden_section_min(const std::function<double(double)>& f, double a, double b,
                          double tol);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
    std::size_t n = 0;
};

// Ordinary least squares y ~ slope*x + intercept.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// OLS of log(y) against x.  Throws invalid_input unless all y > 0 and
// x.size() >= min_samples.
LineFit fit_log_slope(std::span<const double> x, std::span<const double> y,
                      std::size_t min_samples = 2);

// Eigenvalues (ascending) and eigenvectors of a small dense symmetric matrix,
// cyclic Jacobi.  a is row-major m x m, m <= 8.
void jacobi_sym_eig(std::vector<double>& a, std::size_t m, std::vector<double>& eigval,
                    std::vector<double>& eigvec);

// Uniform double in [0,1) from a 64-bit state, splitmix64 stepping.  Used
// instead of <random> distributions so streams are reproducible everywhere.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next_u64();
    double next_unit();  // [0, 1)
};

}  // namespace umb
