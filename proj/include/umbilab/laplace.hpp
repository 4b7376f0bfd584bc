#pragma once

#include <cstdint>

#include "umbilab/curvature.hpp"

namespace umb {

struct Lambda1Options {
    double ritz_tol = 1e-9;   // relative stagnation of the smallest Ritz value
    int max_sweeps = 200;
    int block = 4;
    std::uint64_t seed = 0x5eed5eedULL;
};

// Smallest non-zero eigenvalue of the Laplace-Beltrami operator of the induced
// metric.  The operator is assembled weakly as D^T M D from the 4th-order
// derivative matrices and the bundle's measure, which keeps it symmetric
// positive semidefinite with constants as exact kernel; the eigenvalue comes
// from blocked inverse iteration (Jacobi-preconditioned CG solves, constants
// deflated) with Rayleigh-Ritz extraction.  Throws numerical_error when the
// iteration stalls past max_sweeps.
double lambda1_estimate(const CurvatureBundle& bundle, const Lambda1Options& opts = {});

}  // namespace umb
