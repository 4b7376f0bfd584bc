#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace umb {

// Tensor-product discretization of the round sphere S^2.
//
// Colatitudes are half-offset from the poles, theta_a = (a + 1/2) * pi/n_theta,
// so no node ever sits on the axis; longitudes phi_b = 2*pi*b/n_phi are
// periodic.  The colatitude weights are the interpolatory (Fejer) weights on
// the nodes cos(theta_a), which integrate constants exactly: the weight sum is
// 4*pi to round-off and smooth integrands converge spectrally.
struct SphericalGrid {
    int n_theta = 0;
    int n_phi = 0;
    double dtheta = 0.0;
    double dphi = 0.0;

    std::vector<double> theta, phi;
    std::vector<double> sin_theta, cos_theta;
    std::vector<double> wtheta;   // colatitude quadrature weight per ring
    std::vector<double> weight;   // per-node weight, wtheta[a] * dphi
    std::vector<double> omega;    // unit direction per node, 3 doubles each

    std::size_t size() const { return static_cast<std::size_t>(n_theta) * n_phi; }
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_phi + b; }

    int phi_wrap(int b) const {
        b %= n_phi;
        return b < 0 ? b + n_phi : b;
    }

    // Index of the node reached by stepping `a` rings from the pole-ward edge;
    // out-of-range rings continue through the pole onto the antipodal meridian
    // (phi + pi).  Scalar fields continue with unchanged value along this map.
    std::size_t theta_continue(int a, int b) const {
        if (a < 0) {
            a = -a - 1;
            b += n_phi / 2;
        } else if (a >= n_theta) {
            a = 2 * n_theta - 1 - a;
            b += n_phi / 2;
        }
        return idx(a, phi_wrap(b));
    }

    const double* direction(std::size_t node) const { return &omega[3 * node]; }

    double weight_sum() const;
};

using GridPtr = std::shared_ptr<const SphericalGrid>;

// Requires n_theta >= 8 and even n_phi >= 16 (the pole continuation needs the
// half turn n_phi/2 to be a whole number of longitude steps).
GridPtr build_grid(int n_theta, int n_phi);

// Quadrature of a node-sampled scalar against the round measure d(sigma).
double integrate_sphere(const SphericalGrid& grid, std::span<const double> f);

}  // namespace umb
