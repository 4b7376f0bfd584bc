#pragma once

#include <vector>

#include "umbilab/graph.hpp"
#include "umbilab/tensor.hpp"

namespace umb {

// Everything the stability estimates consume, per node.
//
// Two mean-curvature conventions coexist in the formulas: H_avg = tr_g(h)/n
// enters the traceless part, H_sum = g^{ij} h_ij is the flow speed
// denominator.  Both are stored; H_sum == n * H_avg identically.
//
// The sign of h is fixed so round spheres have h > 0 with respect to the
// outward normal.  `normal` holds the coordinate components (nu^r, nu^theta,
// nu^phi) of the outward unit normal.  `area_element` is sqrt(det g / det
// sigma), the density of the induced measure against the round one, so
// integrals are sums of f * area_element * grid.weight.
struct CurvatureBundle {
    GridPtr grid;
    Ambient ambient = Ambient::Euclidean;

    TensorField g;            // (0,2)
    TensorField g_inv;        // (2,0)
    TensorField h;            // (0,2)
    TensorField A_traceless;  // (0,2), h - H_avg * g

    std::vector<double> v;  // graph gradient factor, sqrt(1 + |Du|^2 / warp^2)
    std::vector<double> H_avg;
    std::vector<double> H_sum;
    std::vector<double> area_element;
    std::vector<double> normal;  // 3 per node

    double surface_dim() const { return 2.0; }
};

// Curvature of a radial graph from the warped-product graph formulas; spatial
// derivatives are the 4th-order stencils of fd.hpp.  Throws numerical_error if
// the induced metric loses positive definiteness at any node.
CurvatureBundle curvature_from_graph(const RadialGraph& graph);

// Cartesian embedding X = center + u * omega (Euclidean ambient only).
std::vector<double> embed_euclidean(const RadialGraph& graph);

// Cartesian components of the outward normal (Euclidean ambient only).
std::vector<double> normal_cartesian(const RadialGraph& graph, const CurvatureBundle& bundle);

// Independent oracle for curvature_from_graph: fundamental forms from
// derivatives of the embedding and the normalized tangent cross product, same
// sign convention.  Euclidean ambient only.
CurvatureBundle curvature_from_embedding(const RadialGraph& graph);

// Ric_ij = (n-1) H^2 g_ij + (n-2) H A°_ij - A°_ik A°^k_j with H = H_avg; the
// flat-ambient Gauss equation rearranged.
TensorField ricci_from_gauss(const CurvatureBundle& bundle);

// det(shape operator) = det(h) / det(g) per node.
std::vector<double> gauss_curvature(const CurvatureBundle& bundle);

// All principal curvatures positive everywhere.
bool is_convex(const CurvatureBundle& bundle);

}  // namespace umb
