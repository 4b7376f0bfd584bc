#pragma once

#include <array>
#include <optional>

#include "umbilab/curvature.hpp"

namespace umb {

// ||T||_p = ( sum |T.T|_g^{p/2} * area_element * weight )^{1/p}; contractions
// raise/lower indices with the bundle metric.  Any p >= 1.  Not normalized by
// area: callers that need the unit-area convention rescale the surface first.
double tensor_lp_norm(const TensorField& t, const CurvatureBundle& bundle, double p);

// max over nodes of |T.T|_g^{1/2}.
double tensor_sup_norm(const TensorField& t, const CurvatureBundle& bundle);

double lp_norm_scalar(std::span<const double> f, const CurvatureBundle& bundle, double p);

double area(const CurvatureBundle& bundle);

struct AreaCenter {
    double area = 0.0;
    std::array<double, 3> x_M{0.0, 0.0, 0.0};
};

// Surface area and center of mass; x_M needs the embedding, Euclidean only.
AreaCenter area_and_center(const RadialGraph& graph, const CurvatureBundle& bundle);

// Homothety u -> s*u with s chosen so the rescaled area is 1 (Euclidean).
// Returns the applied scale.
double rescale_to_unit_area(RadialGraph& graph);

struct UmbilicFit {
    double lambda_star = 0.0;
    double residual = 0.0;
};

// Minimizes lambda -> ||h - lambda g||_p over the real line (golden-section on
// [min H_avg, max H_avg], where the minimizer must lie).  Requires p > n.
UmbilicFit best_umbilic_lambda(const CurvatureBundle& bundle, double p,
                               double lambda_tol = 1e-10);

struct SphereFit {
    AmbientPoint center{0.0, 0.0, 0.0};
    double radius = 0.0;
    double hausdorff = 0.0;
};

// Hausdorff distance from the graph to the geodesic sphere S_R(q).  For
// star-shaped sets both suprema of the Hausdorff distance are attained along
// rays through q, so this is max over nodes of |d(q, node) - R|; q must be a
// star center (checked via the sign of nu(d_q)).
double hausdorff_to_sphere(const RadialGraph& graph, const AmbientPoint& q, double radius);

// Chebyshev-optimal sphere for the radial distance about x_M (Euclidean) or
// the graph center: radius = (max + min)/2, hausdorff = osc/2.
SphereFit best_fit_sphere(const RadialGraph& graph);

// max - min of the geodesic distance from q over the surface; q must be a
// star center of the graph.
double oscillation_about(const RadialGraph& graph, const AmbientPoint& q);

struct GradientBound {
    double v_max = 0.0;
    double kappa_bar = 0.0;
    double bound = 0.0;
    bool holds = false;
};

// Checks v <= exp(kappa_bar * osc u).  kappa_bar defaults to the lower bound
// of the slice curvatures over the occupied radial range: 1/max(u), coth(max
// u) or cot(max u).
GradientBound gradient_bound_check(const RadialGraph& graph, const CurvatureBundle& bundle,
                                   std::optional<double> kappa_bar = std::nullopt);

struct SupportDeviation {
    double deviation = 0.0;
    std::array<double, 3> steiner{0.0, 0.0, 0.0};
    double mean_curvature_integral = 0.0;  // (1/8 pi) * integral of H_sum
};

// Convex Euclidean surfaces, n = 2: max over nodes of
// |<X - q, nu> - (1/8 pi) * integral H_sum dmu| with q the Steiner point of
// the body, computed from the support function sampled on the grid
// directions.  The sum convention in the integral is forced by the round
// sphere, for which the deviation vanishes identically.
SupportDeviation andrews_deviation(const RadialGraph& graph, const CurvatureBundle& bundle);

// || Ric - (n-1) * Hnorm^2 * g ||_{p/2} with Hnorm = ||H_avg||_p supplied by
// the caller; requires p > n.
double ricci_pinching_deficit(const CurvatureBundle& bundle, double p, double h_norm_p);

}  // namespace umb
