#include "umbilab/fd.hpp"

#include <cmath>

#include "umbilab/errors.hpp"

namespace umb {

namespace {

void check_sizes(const SphericalGrid& g, std::span<const double> f, std::span<double> out) {
    if (f.size() != g.size() || out.size() != g.size())
        throw invalid_input("fd: field size does not match grid");
}

}  // namespace

void d_theta(const SphericalGrid& g, std::span<const double> f, std::span<double> out) {
    check_sizes(g, f, out);
    const double c = 1.0 / (12.0 * g.dtheta);
    for (int a = 0; a < g.n_theta; ++a) {
        for (int b = 0; b < g.n_phi; ++b) {
            const double fm2 = f[g.theta_continue(a - 2, b)];
            const double fm1 = f[g.theta_continue(a - 1, b)];
            const double fp1 = f[g.theta_continue(a + 1, b)];
            const double fp2 = f[g.theta_continue(a + 2, b)];
            out[g.idx(a, b)] = c * (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2);
        }
    }
}

void d2_theta(const SphericalGrid& g, std::span<const double> f, std::span<double> out) {
    check_sizes(g, f, out);
    const double c = 1.0 / (12.0 * g.dtheta * g.dtheta);
    for (int a = 0; a < g.n_theta; ++a) {
        for (int b = 0; b < g.n_phi; ++b) {
            const double fm2 = f[g.theta_continue(a - 2, b)];
            const double fm1 = f[g.theta_continue(a - 1, b)];
            const double f0 = f[g.idx(a, b)];
            const double fp1 = f[g.theta_continue(a + 1, b)];
            const double fp2 = f[g.theta_continue(a + 2, b)];
            out[g.idx(a, b)] = c * (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2);
        }
    }
}

void d_phi(const SphericalGrid& g, std::span<const double> f, std::span<double> out) {
    check_sizes(g, f, out);
    const double c = 1.0 / (12.0 * g.dphi);
    for (int a = 0; a < g.n_theta; ++a) {
        const std::size_t row = g.idx(a, 0);
        for (int b = 0; b < g.n_phi; ++b) {
            const double fm2 = f[row + g.phi_wrap(b - 2)];
            const double fm1 = f[row + g.phi_wrap(b - 1)];
            const double fp1 = f[row + g.phi_wrap(b + 1)];
            const double fp2 = f[row + g.phi_wrap(b + 2)];
            out[row + b] = c * (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2);
        }
    }
}

void d2_phi(const SphericalGrid& g, std::span<const double> f, std::span<double> out) {
    check_sizes(g, f, out);
    const double c = 1.0 / (12.0 * g.dphi * g.dphi);
    for (int a = 0; a < g.n_theta; ++a) {
        const std::size_t row = g.idx(a, 0);
        for (int b = 0; b < g.n_phi; ++b) {
            const double fm2 = f[row + g.phi_wrap(b - 2)];
            const double fm1 = f[row + g.phi_wrap(b - 1)];
            const double f0 = f[row + b];
            const double fp1 = f[row + g.phi_wrap(b + 1)];
            const double fp2 = f[row + g.phi_wrap(b + 2)];
            out[row + b] = c * (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2);
        }
    }
}

void d_theta_transpose(const SphericalGrid& g, std::span<const double> f,
                       std::span<double> out) {
    check_sizes(g, f, out);
    for (std::size_t k = 0; k < g.size(); ++k) out[k] = 0.0;
    const double c = 1.0 / (12.0 * g.dtheta);
    for (int a = 0; a < g.n_theta; ++a) {
        for (int b = 0; b < g.n_phi; ++b) {
            const double w = f[g.idx(a, b)];
            out[g.theta_continue(a - 2, b)] += c * w;
            out[g.theta_continue(a - 1, b)] += -8.0 * c * w;
            out[g.theta_continue(a + 1, b)] += 8.0 * c * w;
            out[g.theta_continue(a + 2, b)] += -c * w;
        }
    }
}

void d_phi_transpose(const SphericalGrid& g, std::span<const double> f, std::span<double> out) {
    check_sizes(g, f, out);
    for (std::size_t k = 0; k < g.size(); ++k) out[k] = 0.0;
    const double c = 1.0 / (12.0 * g.dphi);
    for (int a = 0; a < g.n_theta; ++a) {
        const std::size_t row = g.idx(a, 0);
        for (int b = 0; b < g.n_phi; ++b) {
            const double w = f[row + b];
            out[row + g.phi_wrap(b - 2)] += c * w;
            out[row + g.phi_wrap(b - 1)] += -8.0 * c * w;
            out[row + g.phi_wrap(b + 1)] += 8.0 * c * w;
            out[row + g.phi_wrap(b + 2)] += -c * w;
        }
    }
}

void polar_filter(const SphericalGrid& g, std::span<double> f, int m_keep_min) {
    if (f.size() != g.size()) throw invalid_input("polar_filter: size mismatch");
    const int nyquist = g.n_phi / 2;
    std::vector<double> cos_tab(g.n_phi), sin_tab(g.n_phi);
    for (int k = 0; k < g.n_phi; ++k) {
        cos_tab[k] = std::cos(k * g.dphi);
        sin_tab[k] = std::sin(k * g.dphi);
    }
    std::vector<double> ring(g.n_phi);
    for (int a = 0; a < g.n_theta; ++a) {
        int m_cut = static_cast<int>(std::floor(0.9 * g.sin_theta[a] / g.dtheta));
        if (m_cut < m_keep_min) m_cut = m_keep_min;
        if (m_cut >= nyquist) continue;

        double* row = &f[g.idx(a, 0)];
        // Project the deviation from the ring mean: the removed modes are
        // unchanged and a constant ring stays put to round-off.
        double mean = 0.0;
        for (int b = 0; b < g.n_phi; ++b) mean += row[b];
        mean /= g.n_phi;
        for (int b = 0; b < g.n_phi; ++b) ring[b] = row[b] - mean;
        for (int m = m_cut + 1; m <= nyquist; ++m) {
            double am = 0.0, bm = 0.0;
            for (int b = 0; b < g.n_phi; ++b) {
                const int k = (m * b) % g.n_phi;
                am += ring[b] * cos_tab[k];
                bm += ring[b] * sin_tab[k];
            }
            // Nyquist mode carries half the usual mass.
            const double scale = (m == nyquist) ? 1.0 / g.n_phi : 2.0 / g.n_phi;
            am *= scale;
            bm *= scale;
            for (int b = 0; b < g.n_phi; ++b) {
                const int k = (m * b) % g.n_phi;
                row[b] -= am * cos_tab[k] + bm * sin_tab[k];
            }
        }
    }
}

}  // namespace umb
