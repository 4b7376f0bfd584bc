#pragma once

#include <vector>

#include "umbilab/curvature.hpp"

namespace umb {

// Radial coordinate change between hyperbolic space and the Poincare ball of
// radius 2: rho = 2 - 4/(e^r + 1) = 2 tanh(r/2).  The hyperbolic metric is
// e^{2 psi} times the flat ball metric with e^psi = 1/(1 - rho^2/4).
double r_to_rho(double r);                // r >= 0
double rho_to_r(double rho);              // 0 <= rho < 2
double conformal_factor(double rho);      // e^psi
double psi_of_rho(double rho);            // log of the above

// psi evaluated along a ball-model surface (closed form in rho = w, never
// differenced).
struct ConformalFrame {
    std::vector<double> psi;
    double psi_max = 0.0;
};

ConformalFrame frame_for_ball_graph(const RadialGraph& ball_graph);

// Pointwise w = 2 tanh(u/2); the result is a Euclidean graph in the ball.
RadialGraph graph_to_ball(const RadialGraph& hyperbolic_graph);
RadialGraph ball_to_graph(const RadialGraph& ball_graph);

// Transforms a Euclidean ball-model bundle into the hyperbolic one:
//   g_ij = e^{2 psi} g~_ij,   h_ij = e^psi (h~_ij + psi' (rho) nu~^rho g~_ij).
// By construction the traceless parts satisfy A° = e^psi A°~ identically.
CurvatureBundle pull_curvature_to_hyperbolic(const CurvatureBundle& euclid_bundle,
                                             const ConformalFrame& frame,
                                             const RadialGraph& ball_graph);

// Upper bound e^{psi_max} * d~ for the hyperbolic Hausdorff distance of sets
// lying where psi_max was taken.
double hausdorff_transfer(double d_tilde, const ConformalFrame& frame);

}  // namespace umb
