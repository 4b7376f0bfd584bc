#include "umbilab/laplace.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "umbilab/errors.hpp"
#include "umbilab/fd.hpp"
#include "umbilab/numerics.hpp"

namespace umb {

namespace {

// Weak-form Laplace-Beltrami apparatus: A = sum_{ij} D_i^T diag(m g^{ij}) D_j
// with m the node measure (area_element * weight).  Symmetric PSD, constants
// in the kernel exactly because D annihilates them.  B = diag(m).
struct WeakLaplacian {
    const SphericalGrid& grid;
    std::vector<double> m;              // node measure
    std::vector<double> g11, g12, g22;  // inverse metric entries
    std::vector<double> diag;           // diag(A), Jacobi preconditioner
    mutable std::vector<double> ft, fp, qt, qp, t1, t2;

    explicit WeakLaplacian(const CurvatureBundle& b) : grid(*b.grid) {
        const std::size_t n = grid.size();
        m.resize(n);
        g11.resize(n);
        g12.resize(n);
        g22.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            m[k] = b.area_element[k] * grid.weight[k];
            const double* gi = b.g_inv.at(k);
            g11[k] = gi[0];
            g12[k] = gi[1];
            g22[k] = gi[3];
        }
        ft.resize(n);
        fp.resize(n);
        qt.resize(n);
        qp.resize(n);
        t1.resize(n);
        t2.resize(n);

        // diag(A)_k = sum_n (Dt[n,k]^2 m g11 + Dp[n,k]^2 m g22); a cross term
        // would need a node in both stencils, which only happens at the center
        // where the first-derivative coefficient vanishes.
        diag.assign(n, 0.0);
        const double ct = 1.0 / (12.0 * grid.dtheta);
        const double cp = 1.0 / (12.0 * grid.dphi);
        const double coef[4] = {1.0, -8.0, 8.0, -1.0};
        const int off[4] = {-2, -1, 1, 2};
        for (int a = 0; a < grid.n_theta; ++a) {
            for (int bb = 0; bb < grid.n_phi; ++bb) {
                const std::size_t row = grid.idx(a, bb);
                const double mg11 = m[row] * g11[row];
                const double mg22 = m[row] * g22[row];
                for (int j = 0; j < 4; ++j) {
                    const double wt = coef[j] * ct;
                    diag[grid.theta_continue(a + off[j], bb)] += wt * wt * mg11;
                    const double wp = coef[j] * cp;
                    diag[grid.idx(a, grid.phi_wrap(bb + off[j]))] += wp * wp * mg22;
                }
            }
        }
        for (double& d : diag)
            if (!(d > 0.0)) throw numerical_error("lambda1: singular preconditioner entry");
    }

    void apply(std::span<const double> f, std::span<double> out) const {
        d_theta(grid, f, ft);
        d_phi(grid, f, fp);
        for (std::size_t k = 0; k < m.size(); ++k) {
            qt[k] = m[k] * (g11[k] * ft[k] + g12[k] * fp[k]);
            qp[k] = m[k] * (g12[k] * ft[k] + g22[k] * fp[k]);
        }
        d_theta_transpose(grid, qt, t1);
        d_phi_transpose(grid, qp, t2);
        for (std::size_t k = 0; k < m.size(); ++k) out[k] = t1[k] + t2[k];
    }
};

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double dot_w(const Vec& a, const Vec& b, const Vec& w) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k] * w[k];
    return s;
}

}  // namespace

// Blocked LOBPCG on the pencil (A, B) with B = diag(m), Jacobi preconditioner
// and the constant kernel deflated.  The block starts from the low spherical
// harmonics, which are the exact eigenfunctions on round metrics and stay
// O(pinching) away from them on the surfaces this laboratory studies.
double lambda1_estimate(const CurvatureBundle& bundle, const Lambda1Options& opts) {
    const WeakLaplacian op(bundle);
    const SphericalGrid& grid = op.grid;
    const std::size_t n = grid.size();
    const int q = opts.block;
    const double mtot = pairwise_sum(op.m);

    auto project = [&](Vec& f) {
        const double mean = dot_w(f, Vec(n, 1.0), op.m) / mtot;
        for (double& v : f) v -= mean;
    };

    // Start block: ell = 1 harmonics plus P_2, slightly randomized.
    std::vector<Vec> X;
    {
        SplitMix64 rng(opts.seed);
        auto harmonic = [&](auto&& fn) {
            Vec v(n);
            for (int a = 0; a < grid.n_theta; ++a)
                for (int b = 0; b < grid.n_phi; ++b)
                    v[grid.idx(a, b)] = fn(grid.theta[a], grid.phi[b]);
            for (double& x : v) x += 1e-3 * (rng.next_unit() - 0.5);
            return v;
        };
        X.push_back(harmonic([](double th, double) { return std::cos(th); }));
        X.push_back(harmonic([](double th, double ph) { return std::sin(th) * std::cos(ph); }));
        X.push_back(harmonic([](double th, double ph) { return std::sin(th) * std::sin(ph); }));
        X.push_back(harmonic([](double th, double) {
            const double c = std::cos(th);
            return 1.5 * c * c - 0.5;
        }));
        while (static_cast<int>(X.size()) < q) {
            Vec v(n);
            for (double& x : v) x = rng.next_unit() - 0.5;
            X.push_back(std::move(v));
        }
        X.resize(q);
    }

    // B-orthonormalize a list of columns in place; drops nothing but rescales,
    // assuming the starts are independent (they are by construction).
    auto orthonormalize = [&](std::vector<Vec>& W) {
        for (std::size_t j = 0; j < W.size(); ++j) {
            project(W[j]);
            for (std::size_t i = 0; i < j; ++i) {
                const double c = dot_w(W[j], W[i], op.m);
                for (std::size_t k = 0; k < n; ++k) W[j][k] -= c * W[i][k];
            }
            double nb = std::sqrt(dot_w(W[j], W[j], op.m));
            if (!(nb > 1e-140)) {
                // Degenerate direction: replace by a seeded random vector.
                SplitMix64 rng(opts.seed + 977 * (j + 1));
                for (double& x : W[j]) x = rng.next_unit() - 0.5;
                project(W[j]);
                for (std::size_t i = 0; i < j; ++i) {
                    const double c = dot_w(W[j], W[i], op.m);
                    for (std::size_t k = 0; k < n; ++k) W[j][k] -= c * W[i][k];
                }
                nb = std::sqrt(dot_w(W[j], W[j], op.m));
            }
            for (double& x : W[j]) x /= nb;
        }
    };
    orthonormalize(X);

    std::vector<Vec> P;  // previous search directions
    double lambda_prev = -1.0;
    int stagnant = 0;

    for (int iter = 0; iter < opts.max_sweeps; ++iter) {
        // Ritz values of the current block.
        std::vector<Vec> AX(q, Vec(n));
        for (int j = 0; j < q; ++j) op.apply(X[j], AX[j]);
        std::vector<double> lam(q);
        for (int j = 0; j < q; ++j) lam[j] = dot(X[j], AX[j]);

        // Preconditioned residuals W = T (A x - lam B x).
        std::vector<Vec> W(q, Vec(n));
        double res_max = 0.0;
        for (int j = 0; j < q; ++j) {
            double rn = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double r = AX[j][k] - lam[j] * op.m[k] * X[j][k];
                W[j][k] = r / op.diag[k];
                rn += r * r;
            }
            res_max = std::max(res_max, std::sqrt(rn) / std::max(1e-300, std::abs(lam[j])));
            project(W[j]);
        }

        const double lambda = lam[0];
        if (std::getenv("UMB_L1_TRACE"))
            std::fprintf(stderr, "iter %d lam = %.12f %.6f %.6f %.6f res %.2e\n", iter, lam[0],
                         lam[1], lam[2], lam[3], res_max);
        if (lambda_prev > 0.0 &&
            std::abs(lambda - lambda_prev) <= opts.ritz_tol * std::abs(lambda)) {
            if (++stagnant >= 2 && iter >= 4) return lambda;
        } else {
            stagnant = 0;
        }
        lambda_prev = lambda;

        // Subspace [X, W, P], B-orthonormalized column by column against the
        // accumulating basis.
        std::vector<Vec> S = X;
        auto append_block = [&](const std::vector<Vec>& blk) {
            for (const Vec& w : blk) {
                Vec v = w;
                project(v);
                for (const Vec& s : S) {
                    const double c = dot_w(v, s, op.m);
                    for (std::size_t k = 0; k < n; ++k) v[k] -= c * s[k];
                }
                const double nb = std::sqrt(dot_w(v, v, op.m));
                if (nb > 1e-10) {
                    for (double& x : v) x /= nb;
                    S.push_back(std::move(v));
                }
            }
        };
        append_block(W);
        append_block(P);

        const std::size_t s = S.size();
        std::vector<Vec> AS(s, Vec(n));
        for (std::size_t j = 0; j < s; ++j) op.apply(S[j], AS[j]);
        std::vector<double> small(s * s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                const double v = dot(S[i], AS[j]);
                small[i * s + j] = v;
                small[j * s + i] = v;
            }
        std::vector<double> eval, evec;
        jacobi_sym_eig(small, s, eval, evec);

        std::vector<Vec> Xn(q, Vec(n, 0.0));
        for (int j = 0; j < q; ++j)
            for (std::size_t i = 0; i < s; ++i) {
                const double c = evec[i * s + j];
                if (c != 0.0)
                    for (std::size_t k = 0; k < n; ++k) Xn[j][k] += c * S[i][k];
            }

        // New search directions: the part of X_new outside span(X).
        std::vector<Vec> Pn(q, Vec(n));
        for (int j = 0; j < q; ++j) {
            Pn[j] = Xn[j];
            for (int i = 0; i < q; ++i) {
                const double c = dot_w(Xn[j], X[i], op.m);
                for (std::size_t k = 0; k < n; ++k) Pn[j][k] -= c * X[i][k];
            }
        }
        X = std::move(Xn);
        orthonormalize(X);
        P = std::move(Pn);
    }
    throw numerical_error("lambda1: iteration did not converge within the sweep cap");
}

}  // namespace umb
