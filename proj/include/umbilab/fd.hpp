#pragma once

#include <span>
#include <vector>

#include "umbilab/grid.hpp"

namespace umb {

// Fourth-order central finite differences on the lat-long grid.
//
// phi is periodic; theta stencils that run past a pole continue onto the
// antipodal meridian with unchanged value, which is the smooth continuation of
// a scalar along the meridian great circle.  Mixed derivatives must be taken
// as d_phi(d_theta f): the phi pass never crosses a pole, so no component sign
// flips ever enter.
void d_theta(const SphericalGrid& g, std::span<const double> f, std::span<double> out);
void d_phi(const SphericalGrid& g, std::span<const double> f, std::span<double> out);
void d2_theta(const SphericalGrid& g, std::span<const double> f, std::span<double> out);
void d2_phi(const SphericalGrid& g, std::span<const double> f, std::span<double> out);

// Transposes of the first-derivative operators (scatter form), used to build
// symmetric divergence-form operators.
void d_theta_transpose(const SphericalGrid& g, std::span<const double> f, std::span<double> out);
void d_phi_transpose(const SphericalGrid& g, std::span<const double> f, std::span<double> out);

// Removes ring Fourier modes above m_cut(a) = max(m_keep_min,
// floor(0.9 sin(theta_a)/dtheta)).  Near the poles the longitude spacing
// collapses and explicit stepping of the high-m modes is unconditionally
// unstable; a smooth field carries O(sin^m theta) in mode m there, so the cut
// is below discretization error.  m = 0 is never touched, so axisymmetric and
// constant fields pass through up to round-off.
void polar_filter(const SphericalGrid& g, std::span<double> f, int m_keep_min = 2);

}  // namespace umb
