#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "umbilab/errors.hpp"
#include "umbilab/laplace.hpp"
#include "umbilab/measures.hpp"

using namespace umb;

TEST_CASE("first eigenvalue of round spheres") {
    const GridPtr grid = build_grid(64, 128);
    {
        const RadialGraph g = make_sphere_graph(1.0, grid, Ambient::Euclidean);
        const double l1 = lambda1_estimate(curvature_from_graph(g));
        CHECK(std::abs(l1 - 2.0) <= 1e-3);  // lambda_1(S^n) = n
    }
    {
        const RadialGraph g = make_sphere_graph(2.0, grid, Ambient::Euclidean);
        const double l1 = lambda1_estimate(curvature_from_graph(g));
        CHECK(std::abs(l1 - 0.5) <= 1e-3);  // scaling lambda_1 = n / R^2
    }
}

TEST_CASE("scaling invariant lambda1 * R^2 = n") {
    const GridPtr grid = build_grid(48, 96);
    for (double R : {0.5, 1.0, 3.0}) {
        const RadialGraph g = make_sphere_graph(R, grid, Ambient::Euclidean);
        const double l1 = lambda1_estimate(curvature_from_graph(g));
        CHECK(std::abs(l1 * R * R - 2.0) <= 1e-3);
    }
}

TEST_CASE("intrinsic metric only: hyperbolic geodesic spheres") {
    // A geodesic sphere of radius r in H^3 is a round sphere of intrinsic
    // radius sinh(r), so lambda_1 = n / sinh(r)^2.
    const GridPtr grid = build_grid(48, 96);
    const double r = 1.25;
    const RadialGraph g = make_sphere_graph(r, grid, Ambient::Hyperbolic);
    const double l1 = lambda1_estimate(curvature_from_graph(g));
    const double expected = 2.0 / (std::sinh(r) * std::sinh(r));
    CHECK(std::abs(l1 - expected) <= 1e-3 * expected + 1e-6);
}

TEST_CASE("eigenvalue response to pinching is first order in eps") {
    const GridPtr grid = build_grid(48, 96);
    double prev_ratio = 0.0;
    for (double eps : {0.02, 0.05}) {
        const RadialGraph g = make_perturbed_graph(1.0, eps, "y2", 0, grid,
                                                   Ambient::Euclidean);
        const double l1 = lambda1_estimate(curvature_from_graph(g));
        const double ratio = std::abs(l1 - 2.0) / eps;
        CHECK(ratio < 10.0);  // |lambda1 - n| <= K eps with a moderate K
        if (prev_ratio > 0.0) CHECK(std::abs(ratio - prev_ratio) < 0.5 * prev_ratio + 0.2);
        prev_ratio = ratio;
    }
}

TEST_CASE("iteration cap reports non-convergence") {
    const GridPtr grid = build_grid(16, 32);
    const RadialGraph g = make_sphere_graph(1.0, grid, Ambient::Euclidean);
    Lambda1Options opts;
    opts.max_sweeps = 1;
    opts.ritz_tol = 1e-16;
    CHECK_THROWS_AS(lambda1_estimate(curvature_from_graph(g), opts), numerical_error);
}
