#pragma once

#include <cstddef>
#include <vector>

#include "umbilab/grid.hpp"

namespace umb {

// Node-sampled tensor field of rank 0, 1 or 2 on a two-dimensional surface.
// Components are stored node-major; contravariant indices come first in the
// variance signature, so n_contra = 1 at rank 2 means T^i_j.
struct TensorField {
    GridPtr grid;
    int rank = 0;
    int n_contra = 0;
    bool symmetric = false;
    std::vector<double> comp;

    static constexpr int dim = 2;

    int ncomp() const { return 1 << rank; }
    double* at(std::size_t node) { return &comp[static_cast<std::size_t>(ncomp()) * node]; }
    const double* at(std::size_t node) const {
        return &comp[static_cast<std::size_t>(ncomp()) * node];
    }
};

TensorField make_tensor(GridPtr grid, int rank, int n_contra, bool symmetric = false);
TensorField make_scalar_field(GridPtr grid, std::vector<double> values);

// Enforce T_12 == T_21 by symmetrization (rank 2 only).
void symmetrize(TensorField& t);

}  // namespace umb
