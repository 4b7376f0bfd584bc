#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "umbilab/ambient.hpp"
#include "umbilab/grid.hpp"

namespace umb {

// Star-shaped hypersurface given as a radial graph r = u(theta, phi) over a
// spherical grid, in geodesic polar coordinates about `center`.
//
// For the Euclidean ambient `center` is a Cartesian point; otherwise it is a
// label (kept for file round-trips) and all point arithmetic happens in
// exponential coordinates about it.
struct RadialGraph {
    GridPtr grid;
    Ambient ambient = Ambient::Euclidean;
    std::array<double, 3> center{0.0, 0.0, 0.0};
    std::vector<double> u;

    double u_min() const;
    double u_max() const;
    double oscillation() const { return u_max() - u_min(); }
};

// A point expressed relative to a graph's center: Cartesian offset in the
// Euclidean ambient, exponential (r * direction) coordinates otherwise.
using AmbientPoint = std::array<double, 3>;

// Geodesic distance from q to the ambient point at polar coordinates
// (r, direction); law of cosines of the respective space form.
double ambient_distance(Ambient a, const AmbientPoint& q, double r, const double* direction);

void validate_graph(const RadialGraph& g);  // u admissible everywhere

RadialGraph make_sphere_graph(double radius, GridPtr grid, Ambient ambient,
                              const AmbientPoint& center = {0.0, 0.0, 0.0});

// Smooth profiles on S^2, sup-norm at most 1, evaluable at arbitrary (theta,
// phi) so refined grids resample exactly.  Names: "y2", "y3" (sectoral
// harmonic modes of degree 2 and 3), "y2_zonal", "y3_zonal" (Legendre),
// "bump" (localized Gaussian cap), "bandlimited" (seeded random field of
// degree <= 6).
using Profile = std::function<double(double, double)>;
Profile make_profile(const std::string& name, std::uint64_t seed = 0);

// u = radius * (1 + eps * profile).  Requires eps >= 0 and radius*(1 - eps)
// admissible; the resulting u is checked node by node as well.
RadialGraph make_perturbed_graph(double radius, double eps, const Profile& profile,
                                 GridPtr grid, Ambient ambient);
RadialGraph make_perturbed_graph(double radius, double eps, const std::string& profile,
                                 std::uint64_t seed, GridPtr grid, Ambient ambient);

// Samples an arbitrary radial function onto the grid.
RadialGraph make_graph_from_function(GridPtr grid, Ambient ambient, const Profile& radial);

// Default non-round initial data for flow experiments:
// u = 2 + 0.3 * (degree-2 mode) + 0.15 * (degree-3 mode), phases seeded.
RadialGraph make_generic_flow_graph(GridPtr grid, Ambient ambient, std::uint64_t seed = 0);

}  // namespace umb
