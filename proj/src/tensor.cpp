#include "umbilab/tensor.hpp"

#include "umbilab/errors.hpp"

namespace umb {

TensorField make_tensor(GridPtr grid, int rank, int n_contra, bool symmetric) {
    if (!grid) throw invalid_input("make_tensor: missing grid");
    if (rank < 0 || rank > 2) throw invalid_input("make_tensor: rank must be 0, 1 or 2");
    if (n_contra < 0 || n_contra > rank)
        throw invalid_input("make_tensor: variance signature out of range");
    TensorField t;
    t.grid = std::move(grid);
    t.rank = rank;
    t.n_contra = n_contra;
    t.symmetric = symmetric && rank == 2;
    t.comp.assign(t.grid->size() * static_cast<std::size_t>(t.ncomp()), 0.0);
    return t;
}

TensorField make_scalar_field(GridPtr grid, std::vector<double> values) {
    TensorField t = make_tensor(std::move(grid), 0, 0);
    if (values.size() != t.grid->size())
        throw invalid_input("make_scalar_field: size mismatch");
    t.comp = std::move(values);
    return t;
}

void symmetrize(TensorField& t) {
    if (t.rank != 2) return;
    for (std::size_t k = 0; k < t.grid->size(); ++k) {
        double* c = t.at(k);
        const double m = 0.5 * (c[1] + c[2]);
        c[1] = m;
        c[2] = m;
    }
    t.symmetric = true;
}

}  // namespace umb
