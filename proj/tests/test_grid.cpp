#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "umbilab/errors.hpp"
#include "umbilab/fd.hpp"
#include "umbilab/grid.hpp"
#include "umbilab/numerics.hpp"

using namespace umb;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("weights sum to the sphere area") {
    for (auto [nt, np] : {std::pair{16, 32}, {24, 48}, {64, 128}}) {
        const GridPtr g = build_grid(nt, np);
        CHECK(std::abs(g->weight_sum() - 4.0 * kPi) <= 1e-10 * 4.0 * kPi);
    }
}

TEST_CASE("closed-form integrals on the grid") {
    const GridPtr g = build_grid(64, 128);
    std::vector<double> f(g->size());

    // integral of cos^2(theta) over S^2 = 4 pi / 3
    for (int a = 0; a < g->n_theta; ++a)
        for (int b = 0; b < g->n_phi; ++b)
            f[g->idx(a, b)] = g->cos_theta[a] * g->cos_theta[a];
    CHECK(std::abs(integrate_sphere(*g, f) - 4.0 * kPi / 3.0) <= 1e-8);

    // integral of sin^2(theta) cos^2(phi) = 4 pi / 3 as well
    for (int a = 0; a < g->n_theta; ++a)
        for (int b = 0; b < g->n_phi; ++b) {
            const double c = std::cos(g->phi[b]);
            f[g->idx(a, b)] = g->sin_theta[a] * g->sin_theta[a] * c * c;
        }
    CHECK(std::abs(integrate_sphere(*g, f) - 4.0 * kPi / 3.0) <= 1e-10);
}

TEST_CASE("grid preconditions") {
    CHECK_THROWS_AS(build_grid(8, 15), invalid_input);   // odd n_phi
    CHECK_THROWS_AS(build_grid(7, 32), invalid_input);   // too few rings
    CHECK_THROWS_AS(build_grid(16, 14), invalid_input);  // too few longitudes
    CHECK_NOTHROW(build_grid(8, 16));
}

TEST_CASE("no node sits on a pole; phi wraps") {
    const GridPtr g = build_grid(16, 32);
    for (double th : g->theta) {
        CHECK(th > 0.0);
        CHECK(th < kPi);
    }
    CHECK(g->phi_wrap(-1) == g->n_phi - 1);
    CHECK(g->phi_wrap(g->n_phi) == 0);
}

TEST_CASE("pole continuation maps to the antipodal meridian") {
    const GridPtr g = build_grid(16, 32);
    // one ring below the first: same colatitude ring, phi + pi
    CHECK(g->theta_continue(-1, 0) == g->idx(0, 16));
    CHECK(g->theta_continue(-2, 3) == g->idx(1, 19));
    CHECK(g->theta_continue(16, 0) == g->idx(15, 16));
    CHECK(g->theta_continue(17, 31) == g->idx(14, 15));
}

TEST_CASE("derivatives of a smooth field are 4th order") {
    // f = sin^2(theta) cos(2 phi) has closed-form derivatives.
    auto sample = [](const SphericalGrid& g, auto fn) {
        std::vector<double> f(g.size());
        for (int a = 0; a < g.n_theta; ++a)
            for (int b = 0; b < g.n_phi; ++b) f[g.idx(a, b)] = fn(g.theta[a], g.phi[b]);
        return f;
    };
    auto max_err = [&](int nt) {
        const GridPtr g = build_grid(nt, 2 * nt);
        const auto f = sample(*g, [](double th, double ph) {
            return std::sin(th) * std::sin(th) * std::cos(2.0 * ph);
        });
        std::vector<double> dt(g->size()), dp(g->size()), dtt(g->size());
        d_theta(*g, f, dt);
        d_phi(*g, f, dp);
        d2_theta(*g, f, dtt);
        double e = 0.0;
        for (int a = 0; a < g->n_theta; ++a)
            for (int b = 0; b < g->n_phi; ++b) {
                const double th = g->theta[a], ph = g->phi[b];
                const double c2 = std::cos(2.0 * ph);
                e = std::max(e,
                             std::abs(dt[g->idx(a, b)] - 2.0 * std::sin(th) * std::cos(th) * c2));
                e = std::max(e, std::abs(dp[g->idx(a, b)] +
                                         2.0 * std::sin(th) * std::sin(th) * std::sin(2.0 * ph)));
                e = std::max(e, std::abs(dtt[g->idx(a, b)] - 2.0 * std::cos(2.0 * th) * c2));
            }
        return e;
    };
    const double e32 = max_err(32), e64 = max_err(64);
    CHECK(e64 < e32);
    CHECK(std::log2(e32 / e64) > 3.5);
}

TEST_CASE("transpose operators satisfy the duality <Df, w> = <f, D^T w>") {
    const GridPtr g = build_grid(12, 24);
    SplitMix64 rng(7);
    std::vector<double> f(g->size()), w(g->size()), df(g->size()), dtw(g->size());
    for (auto& x : f) x = rng.next_unit() - 0.5;
    for (auto& x : w) x = rng.next_unit() - 0.5;

    auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
        return s;
    };
    d_theta(*g, f, df);
    d_theta_transpose(*g, w, dtw);
    CHECK(std::abs(dot(df, w) - dot(f, dtw)) <= 1e-12);
    d_phi(*g, f, df);
    d_phi_transpose(*g, w, dtw);
    CHECK(std::abs(dot(df, w) - dot(f, dtw)) <= 1e-12);
}

TEST_CASE("polar filter is exact on axisymmetric fields") {
    const GridPtr g = build_grid(32, 64);
    std::vector<double> f(g->size()), f0;
    for (int a = 0; a < g->n_theta; ++a)
        for (int b = 0; b < g->n_phi; ++b)
            f[g->idx(a, b)] = std::cos(g->theta[a]);  // m = 0 only
    f0 = f;
    polar_filter(*g, f);
    for (std::size_t k = 0; k < f.size(); ++k) CHECK(std::abs(f[k] - f0[k]) <= 5e-15);

    // a pure Nyquist oscillation at the first ring must be wiped out
    for (auto& x : f) x = 0.0;
    for (int b = 0; b < g->n_phi; ++b) f[g->idx(0, b)] = (b % 2 == 0) ? 1.0 : -1.0;
    polar_filter(*g, f);
    for (int b = 0; b < g->n_phi; ++b) CHECK(std::abs(f[g->idx(0, b)]) <= 1e-13);
}

TEST_CASE("pairwise sum is deterministic and accurate") {
    std::vector<double> x(1 << 14, 1e-3);
    CHECK(pairwise_sum(x) == doctest::Approx(16.384).epsilon(1e-14));
}
