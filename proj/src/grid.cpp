#include "umbilab/grid.hpp"

#include <cmath>
#include <numbers>

#include "umbilab/errors.hpp"
#include "umbilab/numerics.hpp"

namespace umb {

namespace {

// Interpolatory quadrature weights for integral_{-1}^{1} f(x) dx on the nodes
// x_a = cos((a + 1/2) pi / n) (Fejer's first rule): positive, exact through
// polynomial degree n-1, and asymptotically sin(theta_a) * dtheta.
std::vector<double> fejer1_weights(int n) {
    std::vector<double> w(n);
    for (int a = 0; a < n; ++a) {
        const double th = (a + 0.5) * std::numbers::pi / n;
        double s = 0.0;
        for (int m = 1; m <= n / 2; ++m) s += std::cos(2.0 * m * th) / (4.0 * m * m - 1.0);
        w[a] = (2.0 / n) * (1.0 - 2.0 * s);
    }
    return w;
}

}  // namespace

double SphericalGrid::weight_sum() const { return pairwise_sum(weight); }

GridPtr build_grid(int n_theta, int n_phi) {
    if (n_theta < 8) throw invalid_input("build_grid: n_theta must be at least 8");
    if (n_phi < 16) throw invalid_input("build_grid: n_phi must be at least 16");
    if (n_phi % 2 != 0) throw invalid_input("build_grid: n_phi must be even");

    auto g = std::make_shared<SphericalGrid>();
    g->n_theta = n_theta;
    g->n_phi = n_phi;
    g->dtheta = std::numbers::pi / n_theta;
    g->dphi = 2.0 * std::numbers::pi / n_phi;

    g->theta.resize(n_theta);
    g->sin_theta.resize(n_theta);
    g->cos_theta.resize(n_theta);
    for (int a = 0; a < n_theta; ++a) {
        g->theta[a] = (a + 0.5) * g->dtheta;
        g->sin_theta[a] = std::sin(g->theta[a]);
        g->cos_theta[a] = std::cos(g->theta[a]);
    }
    g->phi.resize(n_phi);
    for (int b = 0; b < n_phi; ++b) g->phi[b] = b * g->dphi;

    g->wtheta = fejer1_weights(n_theta);
    g->weight.resize(g->size());
    g->omega.resize(3 * g->size());
    for (int a = 0; a < n_theta; ++a) {
        for (int b = 0; b < n_phi; ++b) {
            const std::size_t k = g->idx(a, b);
            g->weight[k] = g->wtheta[a] * g->dphi;
            g->omega[3 * k + 0] = g->sin_theta[a] * std::cos(g->phi[b]);
            g->omega[3 * k + 1] = g->sin_theta[a] * std::sin(g->phi[b]);
            g->omega[3 * k + 2] = g->cos_theta[a];
        }
    }
    return g;
}

double integrate_sphere(const SphericalGrid& grid, std::span<const double> f) {
    if (f.size() != grid.size()) throw invalid_input("integrate_sphere: size mismatch");
    std::vector<double> terms(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) terms[k] = f[k] * grid.weight[k];
    return pairwise_sum(terms);
}

}  // namespace umb
