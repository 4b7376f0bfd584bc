#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "umbilab/curvature.hpp"
#include "umbilab/errors.hpp"
#include "umbilab/io.hpp"
#include "umbilab/measures.hpp"

using namespace umb;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_diff(const TensorField& a, const TensorField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.comp.size(); ++i)
        m = std::max(m, std::abs(a.comp[i] - b.comp[i]));
    return m;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// sup over nodes of the pointwise g-norm of A_traceless.
double sup_traceless(const CurvatureBundle& b) { return tensor_sup_norm(b.A_traceless, b); }

}  // namespace

TEST_CASE("sphere graphs are constant and validated") {
    const GridPtr grid = build_grid(16, 32);
    const RadialGraph e = make_sphere_graph(1.0, grid, Ambient::Euclidean);
    for (double u : e.u) CHECK(u == 1.0);
    const RadialGraph h = make_sphere_graph(2.0, grid, Ambient::Hyperbolic);
    for (double u : h.u) CHECK(u == 2.0);
    CHECK_THROWS_AS(make_sphere_graph(1.6, grid, Ambient::SphereCap), invalid_input);
    CHECK_THROWS_AS(make_sphere_graph(0.0, grid, Ambient::Euclidean), invalid_input);
    CHECK_THROWS_AS(make_sphere_graph(-1.0, grid, Ambient::Hyperbolic), invalid_input);
}

TEST_CASE("perturbed graphs: eps = 0 is the sphere, preconditions enforced") {
    const GridPtr grid = build_grid(16, 32);
    const RadialGraph base = make_sphere_graph(1.0, grid, Ambient::Euclidean);
    const RadialGraph flat = make_perturbed_graph(1.0, 0.0, "y2", 0, grid, Ambient::Euclidean);
    CHECK(max_abs_diff(base.u, flat.u) == 0.0);

    CHECK_THROWS_AS(make_perturbed_graph(1.0, 1.5, "bump", 0, grid, Ambient::Euclidean),
                    invalid_input);
    CHECK_THROWS_AS(make_perturbed_graph(1.0, -0.1, "y2", 0, grid, Ambient::Euclidean),
                    invalid_input);
    CHECK_THROWS_AS(make_perturbed_graph(1.5, 0.1, "y2", 0, grid, Ambient::SphereCap),
                    invalid_input);

    const RadialGraph bumpy = make_perturbed_graph(1.0, 0.1, "y2", 0, grid, Ambient::Euclidean);
    const CurvatureBundle b = curvature_from_graph(bumpy);
    CHECK(sup_traceless(b) > 1e-3);  // genuinely non-umbilical
}

TEST_CASE("profiles are bounded by one") {
    for (const char* name : {"y2", "y3", "y2_zonal", "y3_zonal", "bump", "bandlimited"}) {
        const Profile p = make_profile(name, 11);
        double sup = 0.0;
        for (int a = 0; a < 200; ++a)
            for (int b = 0; b < 400; ++b)
                sup = std::max(sup, std::abs(p((a + 0.5) * kPi / 200, b * 2.0 * kPi / 400)));
        CHECK(sup <= 1.0 + 1e-12);
        CHECK(sup > 0.01);
    }
    CHECK_THROWS_AS(make_profile("nope", 0), invalid_input);
}

TEST_CASE("umbilic exactness and the warped-product mean curvature") {
    const GridPtr grid = build_grid(128, 256);

    struct Case {
        Ambient ambient;
        double R;
        double H_sum;  // n * warp'(R)/warp(R)
    };
    const Case cases[] = {
        {Ambient::Euclidean, 2.0, 2.0 / 2.0},
        {Ambient::Hyperbolic, 1.0, 2.0 / std::tanh(1.0)},
        {Ambient::SphereCap, 1.0, 2.0 / std::tan(1.0)},
    };
    for (const Case& c : cases) {
        const RadialGraph g = make_sphere_graph(c.R, grid, c.ambient);
        const CurvatureBundle b = curvature_from_graph(g);
        CHECK(sup_traceless(b) <= 1e-8);
        for (std::size_t k = 0; k < grid->size(); k += 97) {
            CHECK(std::abs(b.H_sum[k] - c.H_sum) <= 1e-6 * std::abs(c.H_sum));
            CHECK(b.H_sum[k] == 2.0 * b.H_avg[k]);
            CHECK(std::abs(b.v[k] - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("bundle invariants: traceless trace, positive definiteness") {
    const GridPtr grid = build_grid(32, 64);
    const RadialGraph g = make_perturbed_graph(1.0, 0.08, "bandlimited", 5, grid,
                                               Ambient::Euclidean);
    const CurvatureBundle b = curvature_from_graph(g);
    for (std::size_t k = 0; k < grid->size(); ++k) {
        const double* gi = b.g_inv.at(k);
        const double* A = b.A_traceless.at(k);
        const double tr = gi[0] * A[0] + gi[1] * A[1] + gi[2] * A[2] + gi[3] * A[3];
        CHECK(std::abs(tr) <= 1e-10);
        const double* gg = b.g.at(k);
        CHECK(gg[0] > 0.0);
        CHECK(gg[0] * gg[3] - gg[1] * gg[2] > 0.0);
    }
}

TEST_CASE("embedding basics") {
    const GridPtr grid = build_grid(16, 32);
    RadialGraph g = make_sphere_graph(1.0, grid, Ambient::Euclidean);
    auto x = embed_euclidean(g);
    for (std::size_t k = 0; k < grid->size(); ++k) {
        const double r = std::sqrt(x[3 * k] * x[3 * k] + x[3 * k + 1] * x[3 * k + 1] +
                                   x[3 * k + 2] * x[3 * k + 2]);
        CHECK(std::abs(r - 1.0) <= 1e-14);
    }
    g.center = {0.5, -0.25, 1.0};
    x = embed_euclidean(g);
    for (std::size_t k = 0; k < grid->size(); ++k) {
        const double dx = x[3 * k] - 0.5, dy = x[3 * k + 1] + 0.25, dz = x[3 * k + 2] - 1.0;
        CHECK(std::abs(std::sqrt(dx * dx + dy * dy + dz * dz) - g.u[k]) <= 1e-14);
    }
    const RadialGraph hyp = make_sphere_graph(1.0, grid, Ambient::Hyperbolic);
    CHECK_THROWS_AS(embed_euclidean(hyp), invalid_input);
    CHECK_THROWS_AS(curvature_from_embedding(hyp), invalid_input);
}

TEST_CASE("embedding oracle: spheres") {
    // The embedding path differentiates the Cartesian components, so spheres
    // are not exact for it; 256x512 puts the 4th-order error below 1e-8.
    const GridPtr grid = build_grid(256, 512);
    for (double R : {1.0, 3.0}) {
        const RadialGraph g = make_sphere_graph(R, grid, Ambient::Euclidean);
        const CurvatureBundle b = curvature_from_embedding(g);
        for (std::size_t k = 0; k < grid->size(); k += 53) {
            CHECK(std::abs(b.H_avg[k] - 1.0 / R) <= 1e-8);
            const double* h = b.h.at(k);
            const double* gg = b.g.at(k);
            for (int c = 0; c < 4; ++c) CHECK(std::abs(h[c] - gg[c] / R) <= 1e-8 * R);
        }
    }
}

TEST_CASE("graph and embedding bundles agree and converge at 4th order") {
    const Profile prof = make_profile("y2", 0);
    auto err_at = [&](int nt) {
        const GridPtr grid = build_grid(nt, 2 * nt);
        const RadialGraph g =
            make_perturbed_graph(1.0, 0.05, prof, grid, Ambient::Euclidean);
        const CurvatureBundle a = curvature_from_graph(g);
        const CurvatureBundle b = curvature_from_embedding(g);
        double e = max_abs_diff(a.h, b.h);
        e = std::max(e, max_abs_diff(a.g, b.g));
        e = std::max(e, max_abs_diff(a.H_avg, b.H_avg));
        e = std::max(e, max_abs_diff(a.v, b.v));
        return e;
    };
    const double e32 = err_at(32), e64 = err_at(64);
    CHECK(e32 > 1e-12);
    CHECK(std::log2(e32 / e64) >= 3.5);
}

TEST_CASE("ricci from the flat Gauss identity") {
    const GridPtr grid = build_grid(64, 128);
    {
        const RadialGraph g = make_sphere_graph(1.0, grid, Ambient::Euclidean);
        const CurvatureBundle b = curvature_from_graph(g);
        const TensorField ric = ricci_from_gauss(b);
        CHECK(max_abs_diff(ric, b.g) <= 1e-10);  // Ric = (n-1) g on the unit sphere
    }
    {
        const RadialGraph g = make_sphere_graph(2.0, grid, Ambient::Euclidean);
        const CurvatureBundle b = curvature_from_graph(g);
        const TensorField ric = ricci_from_gauss(b);
        double e = 0.0;
        for (std::size_t k = 0; k < grid->size(); ++k)
            for (int c = 0; c < 4; ++c)
                e = std::max(e, std::abs(ric.at(k)[c] - 0.25 * b.g.at(k)[c]));
        CHECK(e <= 1e-10);
    }
    {
        // Two-dimensional identity Ric = K g with K = det(shape operator).
        const RadialGraph g =
            make_perturbed_graph(1.0, 0.05, "y2", 0, grid, Ambient::Euclidean);
        const CurvatureBundle b = curvature_from_graph(g);
        const TensorField ric = ricci_from_gauss(b);
        const std::vector<double> K = gauss_curvature(b);
        double e = 0.0;
        for (std::size_t k = 0; k < grid->size(); ++k)
            for (int c = 0; c < 4; ++c)
                e = std::max(e, std::abs(ric.at(k)[c] - K[k] * b.g.at(k)[c]));
        CHECK(e <= 1e-6);
    }
}

TEST_CASE("axisymmetric graphs stay axisymmetric and match a 1-D computation") {
    const GridPtr grid = build_grid(64, 128);
    const RadialGraph g = make_perturbed_graph(1.0, 0.1, "y2_zonal", 0, grid,
                                               Ambient::Hyperbolic);
    const CurvatureBundle b = curvature_from_graph(g);
    // phi-independence of every field
    for (int a = 0; a < grid->n_theta; ++a) {
        const std::size_t k0 = grid->idx(a, 0);
        for (int bb = 1; bb < grid->n_phi; ++bb) {
            const std::size_t k = grid->idx(a, bb);
            CHECK(std::abs(b.H_sum[k] - b.H_sum[k0]) <= 1e-12);
            CHECK(std::abs(b.v[k] - b.v[k0]) <= 1e-12);
            CHECK(std::abs(b.h.at(k)[0] - b.h.at(k0)[0]) <= 1e-12);
        }
    }

    // Dedicated theta-only evaluation: same stencils on the meridian line,
    // with u continued through both poles (value-preserving).
    const int nt = grid->n_theta;
    std::vector<double> u1(nt), ut(nt), utt(nt);
    for (int a = 0; a < nt; ++a) u1[a] = g.u[grid->idx(a, 0)];
    auto cont = [&](int a) { return a < 0 ? -a - 1 : (a >= nt ? 2 * nt - 1 - a : a); };
    for (int a = 0; a < nt; ++a) {
        const double um2 = u1[cont(a - 2)], um1 = u1[cont(a - 1)];
        const double up1 = u1[cont(a + 1)], up2 = u1[cont(a + 2)];
        ut[a] = (um2 - 8.0 * um1 + 8.0 * up1 - up2) / (12.0 * grid->dtheta);
        utt[a] = (-um2 + 16.0 * um1 - 30.0 * u1[a] + 16.0 * up1 - up2) /
                 (12.0 * grid->dtheta * grid->dtheta);
    }
    for (int a = 0; a < nt; ++a) {
        const double th = warp(Ambient::Hyperbolic, u1[a]);
        const double thp = warp_prime(Ambient::Hyperbolic, u1[a]);
        const double s = grid->sin_theta[a], c = grid->cos_theta[a];
        const double v = std::sqrt(1.0 + ut[a] * ut[a] / (th * th));
        const double g_tt = ut[a] * ut[a] + th * th;
        const double g_pp = th * th * s * s;
        const double h_tt = (-utt[a] + th * thp + 2.0 * thp / th * ut[a] * ut[a]) / v;
        const double h_pp = (-(s * c * ut[a]) + th * thp * s * s) / v;
        const double H = h_tt / g_tt + h_pp / g_pp;
        const std::size_t k = grid->idx(a, 0);
        CHECK(std::abs(b.v[k] - v) <= 1e-10);
        CHECK(std::abs(b.H_sum[k] - H) <= 1e-10);
        CHECK(std::abs(b.h.at(k)[0] - h_tt) <= 1e-10);
        CHECK(std::abs(b.h.at(k)[3] - h_pp) <= 1e-10);
    }
}

TEST_CASE("graph json round-trip is bit exact") {
    const GridPtr grid = build_grid(12, 24);
    RadialGraph g = make_perturbed_graph(1.0, 0.07, "bandlimited", 3, grid,
                                         Ambient::Hyperbolic);
    g.u[5] = 2.0 + 1e-17;            // survives the shortest round-trip encoding
    g.u[7] = 0.1234567890123456789;  // more digits than a double holds
    g.center = {0.125, -3.5e-200, 7.25};
    const std::string path = "/tmp/umb_roundtrip_test.json";
    save_graph(g, path);
    const RadialGraph back = load_graph(path);
    CHECK(back.ambient == g.ambient);
    CHECK(back.center == g.center);
    REQUIRE(back.u.size() == g.u.size());
    for (std::size_t k = 0; k < g.u.size(); ++k) CHECK(back.u[k] == g.u[k]);
}

TEST_CASE("graph json rejects malformed input") {
    CHECK_THROWS_AS(load_graph("/tmp/umb_does_not_exist.json"), io_error);
    const std::string path = "/tmp/umb_bad_graph.json";
    write_text_file(path, "{\"ambient\": \"euclidean\", \"n_theta\": 8}");
    CHECK_THROWS_AS(load_graph(path), io_error);
    write_text_file(path, "not json at all");
    CHECK_THROWS_AS(load_graph(path), io_error);
}
