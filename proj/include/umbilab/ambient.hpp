#pragma once

#include <string>

namespace umb {

// Rotationally symmetric ambient spaces g = dr^2 + warp(r)^2 sigma with
// warp = r, sinh r, sin r.  The spherical ambient is restricted to an open
// hemisphere, r in (0, pi/2).
enum class Ambient { Euclidean, Hyperbolic, SphereCap };

double warp(Ambient a, double r);        // theta(r)
double warp_prime(Ambient a, double r);  // theta'(r)

// Open admissible radial range (0, r_max); r_max is +inf except for SphereCap.
double radial_limit(Ambient a);
bool radius_admissible(Ambient a, double r);

std::string ambient_name(Ambient a);
Ambient ambient_from_name(const std::string& name);  // throws invalid_input

}  // namespace umb
