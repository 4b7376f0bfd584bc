#include "umbilab/ambient.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "umbilab/errors.hpp"

namespace umb {

double warp(Ambient a, double r) {
    switch (a) {
        case Ambient::Euclidean: return r;
        case Ambient::Hyperbolic: return std::sinh(r);
        case Ambient::SphereCap: return std::sin(r);
    }
    return 0.0;
}

double warp_prime(Ambient a, double r) {
    switch (a) {
        case Ambient::Euclidean: return 1.0;
        case Ambient::Hyperbolic: return std::cosh(r);
        case Ambient::SphereCap: return std::cos(r);
    }
    return 0.0;
}

double radial_limit(Ambient a) {
    return a == Ambient::SphereCap ? 0.5 * std::numbers::pi
                                   : std::numeric_limits<double>::infinity();
}

bool radius_admissible(Ambient a, double r) {
    return std::isfinite(r) && r > 0.0 && r < radial_limit(a);
}

std::string ambient_name(Ambient a) {
    switch (a) {
        case Ambient::Euclidean: return "euclidean";
        case Ambient::Hyperbolic: return "hyperbolic";
        case Ambient::SphereCap: return "sphere_cap";
    }
    return "?";
}

Ambient ambient_from_name(const std::string& name) {
    if (name == "euclidean") return Ambient::Euclidean;
    if (name == "hyperbolic") return Ambient::Hyperbolic;
    if (name == "sphere_cap") return Ambient::SphereCap;
    throw invalid_input("unknown ambient '" + name + "'");
}

}  // namespace umb
