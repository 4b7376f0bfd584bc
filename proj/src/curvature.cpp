#include "umbilab/curvature.hpp"

#include <cmath>

#include "umbilab/errors.hpp"
#include "umbilab/fd.hpp"

namespace umb {

namespace {

constexpr int kDim = 2;  // surface dimension of the discrete implementation

struct Derivatives {
    std::vector<double> ut, up, utt, upp, utp;
};

Derivatives graph_derivatives(const SphericalGrid& grid, std::span<const double> u) {
    Derivatives d;
    const std::size_t n = grid.size();
    d.ut.resize(n);
    d.up.resize(n);
    d.utt.resize(n);
    d.upp.resize(n);
    d.utp.resize(n);
    d_theta(grid, u, d.ut);
    d_phi(grid, u, d.up);
    d2_theta(grid, u, d.utt);
    d2_phi(grid, u, d.upp);
    // Mixed derivative as d_phi(d_theta u): the phi pass stays on rings, so
    // the pole continuation is only ever applied to u itself.
    d_phi(grid, d.ut, d.utp);
    return d;
}

CurvatureBundle bundle_shell(const RadialGraph& graph) {
    CurvatureBundle b;
    b.grid = graph.grid;
    b.ambient = graph.ambient;
    b.g = make_tensor(graph.grid, 2, 0, true);
    b.g_inv = make_tensor(graph.grid, 2, 2, true);
    b.h = make_tensor(graph.grid, 2, 0, true);
    b.A_traceless = make_tensor(graph.grid, 2, 0, true);
    const std::size_t n = graph.grid->size();
    b.v.resize(n);
    b.H_avg.resize(n);
    b.H_sum.resize(n);
    b.area_element.resize(n);
    b.normal.resize(3 * n);
    return b;
}

// Fills g_inv, H, A_traceless, area_element from g and h.
void finish_bundle(CurvatureBundle& b, const char* who) {
    const SphericalGrid& grid = *b.grid;
    for (int a = 0; a < grid.n_theta; ++a) {
        const double s = grid.sin_theta[a];
        for (int bb = 0; bb < grid.n_phi; ++bb) {
            const std::size_t k = grid.idx(a, bb);
            const double* g = b.g.at(k);
            double* gi = b.g_inv.at(k);
            const double det = g[0] * g[3] - g[1] * g[2];
            if (!(g[0] > 0.0) || !(det > 0.0))
                throw numerical_error(std::string(who) +
                                      ": induced metric lost positive definiteness");
            gi[0] = g[3] / det;
            gi[1] = -g[1] / det;
            gi[2] = -g[2] / det;
            gi[3] = g[0] / det;

            const double* h = b.h.at(k);
            const double hsum = gi[0] * h[0] + gi[1] * h[1] + gi[2] * h[2] + gi[3] * h[3];
            b.H_sum[k] = hsum;
            b.H_avg[k] = hsum / kDim;

            double* A = b.A_traceless.at(k);
            for (int c = 0; c < 4; ++c) A[c] = h[c] - b.H_avg[k] * g[c];

            b.area_element[k] = std::sqrt(det) / s;
        }
    }
}

}  // namespace

CurvatureBundle curvature_from_graph(const RadialGraph& graph) {
    validate_graph(graph);
    const SphericalGrid& grid = *graph.grid;
    const Derivatives d = graph_derivatives(grid, graph.u);

    CurvatureBundle b = bundle_shell(graph);
    for (int a = 0; a < grid.n_theta; ++a) {
        const double s = grid.sin_theta[a];
        const double c = grid.cos_theta[a];
        const double cot = c / s;
        for (int bb = 0; bb < grid.n_phi; ++bb) {
            const std::size_t k = grid.idx(a, bb);
            const double u = graph.u[k];
            const double ut = d.ut[k], up = d.up[k];
            const double th = warp(graph.ambient, u);
            const double thp = warp_prime(graph.ambient, u);
            const double th2 = th * th;

            double* g = b.g.at(k);
            g[0] = ut * ut + th2;
            g[1] = ut * up;
            g[2] = g[1];
            g[3] = up * up + th2 * s * s;

            const double grad2 = ut * ut + (up * up) / (s * s);
            const double v = std::sqrt(1.0 + grad2 / th2);
            b.v[k] = v;

            // Covariant Hessian of u in the round metric.
            const double Htt = d.utt[k];
            const double Htp = d.utp[k] - cot * up;
            const double Hpp = d.upp[k] + s * c * ut;

            const double fac = 2.0 * thp / th;
            double* h = b.h.at(k);
            h[0] = (-Htt + th * thp + fac * ut * ut) / v;
            h[1] = (-Htp + fac * ut * up) / v;
            h[2] = h[1];
            h[3] = (-Hpp + th * thp * s * s + fac * up * up) / v;

            double* nu = &b.normal[3 * k];
            nu[0] = 1.0 / v;
            nu[1] = -ut / (th2 * v);
            nu[2] = -up / (th2 * s * s * v);
        }
    }
    finish_bundle(b, "curvature_from_graph");
    return b;
}

std::vector<double> embed_euclidean(const RadialGraph& graph) {
    if (graph.ambient != Ambient::Euclidean)
        throw invalid_input("embed_euclidean: ambient must be Euclidean");
    validate_graph(graph);
    const SphericalGrid& grid = *graph.grid;
    std::vector<double> x(3 * grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double* w = grid.direction(k);
        for (int i = 0; i < 3; ++i) x[3 * k + i] = graph.center[i] + graph.u[k] * w[i];
    }
    return x;
}

std::vector<double> normal_cartesian(const RadialGraph& graph, const CurvatureBundle& bundle) {
    if (graph.ambient != Ambient::Euclidean)
        throw invalid_input("normal_cartesian: ambient must be Euclidean");
    const SphericalGrid& grid = *graph.grid;
    std::vector<double> out(3 * grid.size());
    for (int a = 0; a < grid.n_theta; ++a) {
        const double st = grid.sin_theta[a], ct = grid.cos_theta[a];
        for (int bb = 0; bb < grid.n_phi; ++bb) {
            const std::size_t k = grid.idx(a, bb);
            const double cp = std::cos(grid.phi[bb]), sp = std::sin(grid.phi[bb]);
            const double er[3] = {st * cp, st * sp, ct};
            const double et[3] = {ct * cp, ct * sp, -st};
            const double ep[3] = {-sp, cp, 0.0};
            const double u = graph.u[k];
            const double* nu = &bundle.normal[3 * k];
            for (int i = 0; i < 3; ++i)
                out[3 * k + i] = nu[0] * er[i] + nu[1] * u * et[i] + nu[2] * u * st * ep[i];
        }
    }
    return out;
}

CurvatureBundle curvature_from_embedding(const RadialGraph& graph) {
    if (graph.ambient != Ambient::Euclidean)
        throw invalid_input("curvature_from_embedding: ambient must be Euclidean");
    const SphericalGrid& grid = *graph.grid;
    const std::vector<double> x = embed_euclidean(graph);
    const std::size_t n = grid.size();

    // Component-wise derivatives of the embedding; Cartesian components are
    // global scalars on the sphere, so the pole continuation applies as-is.
    std::vector<double> comp(n), xt(3 * n), xp(3 * n), xtt(3 * n), xpp(3 * n), xtp(3 * n);
    std::vector<double> work(n), work2(n);
    for (int i = 0; i < 3; ++i) {
        for (std::size_t k = 0; k < n; ++k) comp[k] = x[3 * k + i];
        d_theta(grid, comp, work);
        for (std::size_t k = 0; k < n; ++k) xt[3 * k + i] = work[k];
        d_phi(grid, comp, work2);
        for (std::size_t k = 0; k < n; ++k) xp[3 * k + i] = work2[k];
        d2_theta(grid, comp, work2);
        for (std::size_t k = 0; k < n; ++k) xtt[3 * k + i] = work2[k];
        d2_phi(grid, comp, work2);
        for (std::size_t k = 0; k < n; ++k) xpp[3 * k + i] = work2[k];
        d_phi(grid, work, work2);  // work still holds d_theta of component i
        for (std::size_t k = 0; k < n; ++k) xtp[3 * k + i] = work2[k];
    }

    auto dot = [](const double* a, const double* b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };

    CurvatureBundle b = bundle_shell(graph);
    for (int a = 0; a < grid.n_theta; ++a) {
        const double st = grid.sin_theta[a], ct = grid.cos_theta[a];
        for (int bb = 0; bb < grid.n_phi; ++bb) {
            const std::size_t k = grid.idx(a, bb);
            const double* Xt = &xt[3 * k];
            const double* Xp = &xp[3 * k];

            double* g = b.g.at(k);
            g[0] = dot(Xt, Xt);
            g[1] = dot(Xt, Xp);
            g[2] = g[1];
            g[3] = dot(Xp, Xp);

            double N[3] = {Xt[1] * Xp[2] - Xt[2] * Xp[1], Xt[2] * Xp[0] - Xt[0] * Xp[2],
                           Xt[0] * Xp[1] - Xt[1] * Xp[0]};
            const double nn = std::sqrt(dot(N, N));
            if (!(nn > 1e-14))
                throw numerical_error("curvature_from_embedding: degenerate tangent plane");
            for (double& c : N) c /= nn;

            // Sign convention: h = -<X_{,ij}, N>, so round spheres come out
            // positive with the outward normal.
            double* h = b.h.at(k);
            h[0] = -dot(&xtt[3 * k], N);
            h[1] = -dot(&xtp[3 * k], N);
            h[2] = h[1];
            h[3] = -dot(&xpp[3 * k], N);

            const double cp = std::cos(grid.phi[bb]), sp = std::sin(grid.phi[bb]);
            const double er[3] = {st * cp, st * sp, ct};
            const double et[3] = {ct * cp, ct * sp, -st};
            const double ep[3] = {-sp, cp, 0.0};
            const double u = graph.u[k];
            double* nu = &b.normal[3 * k];
            nu[0] = dot(N, er);
            nu[1] = dot(N, et) / u;
            nu[2] = dot(N, ep) / (u * st);
            b.v[k] = 1.0 / nu[0];
        }
    }
    finish_bundle(b, "curvature_from_embedding");
    return b;
}

TensorField ricci_from_gauss(const CurvatureBundle& bundle) {
    constexpr double n = kDim;
    TensorField ric = make_tensor(bundle.grid, 2, 0, true);
    for (std::size_t k = 0; k < bundle.grid->size(); ++k) {
        const double H = bundle.H_avg[k];
        const double* g = bundle.g.at(k);
        const double* gi = bundle.g_inv.at(k);
        const double* A = bundle.A_traceless.at(k);
        double* r = ric.at(k);
        // A_ik g^{kl} A_lj
        double AA[4];
        double Au[4];  // A with second index raised: A_i^l = A_ik g^{kl}
        Au[0] = A[0] * gi[0] + A[1] * gi[2];
        Au[1] = A[0] * gi[1] + A[1] * gi[3];
        Au[2] = A[2] * gi[0] + A[3] * gi[2];
        Au[3] = A[2] * gi[1] + A[3] * gi[3];
        AA[0] = Au[0] * A[0] + Au[1] * A[2];
        AA[1] = Au[0] * A[1] + Au[1] * A[3];
        AA[2] = Au[2] * A[0] + Au[3] * A[2];
        AA[3] = Au[2] * A[1] + Au[3] * A[3];
        for (int c = 0; c < 4; ++c)
            r[c] = (n - 1.0) * H * H * g[c] + (n - 2.0) * H * A[c] - AA[c];
    }
    return ric;
}

std::vector<double> gauss_curvature(const CurvatureBundle& bundle) {
    std::vector<double> out(bundle.grid->size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double* g = bundle.g.at(k);
        const double* h = bundle.h.at(k);
        out[k] = (h[0] * h[3] - h[1] * h[2]) / (g[0] * g[3] - g[1] * g[2]);
    }
    return out;
}

bool is_convex(const CurvatureBundle& bundle) {
    for (std::size_t k = 0; k < bundle.grid->size(); ++k) {
        const double* g = bundle.g.at(k);
        const double* h = bundle.h.at(k);
        const double det_h = h[0] * h[3] - h[1] * h[2];
        const double det_g = g[0] * g[3] - g[1] * g[2];
        // Shape operator g^{-1} h: positive eigenvalues iff trace and
        // determinant are both positive.
        if (!(det_h / det_g > 0.0) || !(bundle.H_sum[k] > 0.0)) return false;
    }
    return true;
}

}  // namespace umb
