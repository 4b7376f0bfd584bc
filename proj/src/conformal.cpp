#include "umbilab/conformal.hpp"

#include <algorithm>
#include <cmath>

#include "umbilab/errors.hpp"

namespace umb {

double r_to_rho(double r) {
    if (!(r >= 0.0)) throw invalid_input("r_to_rho: r must be >= 0");
    return 2.0 * std::tanh(0.5 * r);
}

double rho_to_r(double rho) {
    if (!(rho >= 0.0) || rho >= 2.0) throw invalid_input("rho_to_r: rho must lie in [0, 2)");
    return 2.0 * std::atanh(0.5 * rho);
}

double conformal_factor(double rho) {
    if (rho >= 2.0) throw invalid_input("conformal_factor: rho must lie below 2");
    return 1.0 / (1.0 - 0.25 * rho * rho);
}

double psi_of_rho(double rho) {
    if (rho >= 2.0) throw invalid_input("psi_of_rho: rho must lie below 2");
    return -std::log1p(-0.25 * rho * rho);
}

ConformalFrame frame_for_ball_graph(const RadialGraph& ball_graph) {
    if (ball_graph.ambient != Ambient::Euclidean)
        throw invalid_input("frame_for_ball_graph: ball graphs are Euclidean");
    ConformalFrame f;
    f.psi.resize(ball_graph.u.size());
    for (std::size_t k = 0; k < f.psi.size(); ++k) {
        if (ball_graph.u[k] >= 2.0)
            throw invalid_input("frame_for_ball_graph: graph leaves the ball of radius 2");
        f.psi[k] = psi_of_rho(ball_graph.u[k]);
    }
    f.psi_max = *std::max_element(f.psi.begin(), f.psi.end());
    return f;
}

RadialGraph graph_to_ball(const RadialGraph& hyperbolic_graph) {
    if (hyperbolic_graph.ambient != Ambient::Hyperbolic)
        throw invalid_input("graph_to_ball: hyperbolic ambient required");
    validate_graph(hyperbolic_graph);
    RadialGraph ball = hyperbolic_graph;
    ball.ambient = Ambient::Euclidean;
    for (double& w : ball.u) w = r_to_rho(w);
    validate_graph(ball);  // u = 0 would collapse to a point, not a hypersurface
    return ball;
}

RadialGraph ball_to_graph(const RadialGraph& ball_graph) {
    if (ball_graph.ambient != Ambient::Euclidean)
        throw invalid_input("ball_to_graph: ball graphs are Euclidean");
    validate_graph(ball_graph);
    RadialGraph hyp = ball_graph;
    hyp.ambient = Ambient::Hyperbolic;
    for (double& r : hyp.u) {
        if (r >= 2.0) throw invalid_input("ball_to_graph: graph leaves the ball of radius 2");
        r = rho_to_r(r);
    }
    validate_graph(hyp);
    return hyp;
}

CurvatureBundle pull_curvature_to_hyperbolic(const CurvatureBundle& euclid_bundle,
                                             const ConformalFrame& frame,
                                             const RadialGraph& ball_graph) {
    if (euclid_bundle.ambient != Ambient::Euclidean)
        throw invalid_input("pull_curvature_to_hyperbolic: bundle must be the ball-model one");
    if (frame.psi.size() != ball_graph.u.size() ||
        euclid_bundle.grid->size() != ball_graph.u.size())
        throw invalid_input("pull_curvature_to_hyperbolic: size mismatch");

    CurvatureBundle hyp;
    hyp.grid = euclid_bundle.grid;
    hyp.ambient = Ambient::Hyperbolic;
    hyp.g = make_tensor(hyp.grid, 2, 0, true);
    hyp.g_inv = make_tensor(hyp.grid, 2, 2, true);
    hyp.h = make_tensor(hyp.grid, 2, 0, true);
    hyp.A_traceless = make_tensor(hyp.grid, 2, 0, true);
    const std::size_t n = hyp.grid->size();
    hyp.v.resize(n);
    hyp.H_avg.resize(n);
    hyp.H_sum.resize(n);
    hyp.area_element.resize(n);
    hyp.normal.resize(3 * n);

    for (std::size_t k = 0; k < n; ++k) {
        const double rho = ball_graph.u[k];
        if (rho >= 2.0)
            throw invalid_input("pull_curvature_to_hyperbolic: w >= 2 at a node");
        const double epsi = std::exp(frame.psi[k]);
        // Ambient gradient of psi is radial: psi'(rho) = (rho/2) e^psi, and
        // the radial coordinate vector is Euclidean-unit, so the normal
        // derivative is psi'(rho) * nu^rho.
        const double psi_prime = 0.5 * rho * epsi;
        const double nu_rho = euclid_bundle.normal[3 * k];
        const double slope = psi_prime * nu_rho;

        const double* ge = euclid_bundle.g.at(k);
        const double* he = euclid_bundle.h.at(k);
        double* g = hyp.g.at(k);
        double* gi = hyp.g_inv.at(k);
        double* h = hyp.h.at(k);
        const double e2 = epsi * epsi;
        for (int c = 0; c < 4; ++c) {
            g[c] = e2 * ge[c];
            h[c] = epsi * (he[c] + slope * ge[c]);
        }
        const double* gie = euclid_bundle.g_inv.at(k);
        for (int c = 0; c < 4; ++c) gi[c] = gie[c] / e2;

        const double hsum = gi[0] * h[0] + 2.0 * gi[1] * h[1] + gi[3] * h[3];
        hyp.H_sum[k] = hsum;
        hyp.H_avg[k] = 0.5 * hsum;
        double* A = hyp.A_traceless.at(k);
        for (int c = 0; c < 4; ++c) A[c] = h[c] - hyp.H_avg[k] * g[c];

        // The gradient factor is invariant under the radial conformal map;
        // the area density picks up e^{2 psi}.
        hyp.v[k] = euclid_bundle.v[k];
        hyp.area_element[k] = e2 * euclid_bundle.area_element[k];

        // nu = e^{-psi} nu~ in the (rho, angular) frame; switching the radial
        // leg to d/dr absorbs one factor of e^psi.
        hyp.normal[3 * k + 0] = euclid_bundle.normal[3 * k + 0];
        hyp.normal[3 * k + 1] = euclid_bundle.normal[3 * k + 1] / epsi;
        hyp.normal[3 * k + 2] = euclid_bundle.normal[3 * k + 2] / epsi;
    }
    return hyp;
}

double hausdorff_transfer(double d_tilde, const ConformalFrame& frame) {
    if (!(d_tilde >= 0.0)) throw invalid_input("hausdorff_transfer: negative distance");
    return std::exp(frame.psi_max) * d_tilde;
}

}  // namespace umb
