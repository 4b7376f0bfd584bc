#include "umbilab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "umbilab/errors.hpp"
#include "umbilab/numerics.hpp"

namespace umb {

double RadialGraph::u_min() const { return *std::min_element(u.begin(), u.end()); }
double RadialGraph::u_max() const { return *std::max_element(u.begin(), u.end()); }

double ambient_distance(Ambient a, const AmbientPoint& q, double r, const double* w) {
    const double rq = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
    if (a == Ambient::Euclidean) {
        const double dx = r * w[0] - q[0];
        const double dy = r * w[1] - q[1];
        const double dz = r * w[2] - q[2];
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }
    double cosg = 1.0;
    if (rq > 0.0) cosg = (q[0] * w[0] + q[1] * w[1] + q[2] * w[2]) / rq;
    cosg = std::clamp(cosg, -1.0, 1.0);
    if (a == Ambient::Hyperbolic) {
        const double ch = std::cosh(r) * std::cosh(rq) - std::sinh(r) * std::sinh(rq) * cosg;
        return std::acosh(std::max(1.0, ch));
    }
    const double cd = std::cos(r) * std::cos(rq) + std::sin(r) * std::sin(rq) * cosg;
    return std::acos(std::clamp(cd, -1.0, 1.0));
}

void validate_graph(const RadialGraph& g) {
    if (!g.grid) throw invalid_input("graph: missing grid");
    if (g.u.size() != g.grid->size()) throw invalid_input("graph: u size does not match grid");
    const double lim = radial_limit(g.ambient);
    for (double r : g.u) {
        if (!(r > 0.0) || !(r < lim) || !std::isfinite(r))
            throw invalid_input("graph: radial value outside the admissible range");
    }
}

RadialGraph make_sphere_graph(double radius, GridPtr grid, Ambient ambient,
                              const AmbientPoint& center) {
    if (!radius_admissible(ambient, radius))
        throw invalid_input("make_sphere_graph: radius outside the admissible range of " +
                            ambient_name(ambient));
    RadialGraph g;
    g.grid = std::move(grid);
    g.ambient = ambient;
    g.center = center;
    g.u.assign(g.grid->size(), radius);
    return g;
}

namespace {

double legendre(int l, double x) {
    double p0 = 1.0, p1 = x;
    if (l == 0) return p0;
    for (int k = 2; k <= l; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

Profile bandlimited_profile(std::uint64_t seed) {
    // Sum of rotated zonal harmonics of degree 1..6; each term P_l(omega .
    // axis) is an exact degree-l mode, so the field is band-limited and
    // evaluable anywhere.
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
    struct Term {
        double ax, ay, az, c;
        int l;
    };
    std::vector<Term> terms;
    for (int j = 0; j < 10; ++j) {
        const double z = 2.0 * rng.next_unit() - 1.0;
        const double ph = 2.0 * std::numbers::pi * rng.next_unit();
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        Term t;
        t.ax = s * std::cos(ph);
        t.ay = s * std::sin(ph);
        t.az = z;
        t.l = 1 + static_cast<int>(rng.next_unit() * 6.0);
        if (t.l > 6) t.l = 6;
        t.c = 2.0 * rng.next_unit() - 1.0;
        terms.push_back(t);
    }
    auto raw = [terms](double th, double ph) {
        const double x = std::sin(th) * std::cos(ph);
        const double y = std::sin(th) * std::sin(ph);
        const double z = std::cos(th);
        double s = 0.0;
        for (const auto& t : terms) s += t.c * legendre(t.l, x * t.ax + y * t.ay + z * t.az);
        return s;
    };
    // Normalize the sup over a fine scan so the profile is bounded by 1.
    double sup = 0.0;
    const int nt = 256, np = 512;
    for (int a = 0; a < nt; ++a) {
        const double th = (a + 0.5) * std::numbers::pi / nt;
        for (int b = 0; b < np; ++b)
            sup = std::max(sup, std::abs(raw(th, b * 2.0 * std::numbers::pi / np)));
    }
    if (sup == 0.0) sup = 1.0;
    const double inv = 1.0 / (1.02 * sup);  // margin against off-scan extrema
    return [raw, inv](double th, double ph) { return inv * raw(th, ph); };
}

}  // namespace

Profile make_profile(const std::string& name, std::uint64_t seed) {
    if (name == "y2") {
        return [](double th, double ph) {
            const double s = std::sin(th);
            return s * s * std::cos(2.0 * ph);
        };
    }
    if (name == "y3") {
        return [](double th, double ph) {
            const double s = std::sin(th);
            return s * s * s * std::cos(3.0 * ph);
        };
    }
    if (name == "y2_zonal") {
        return [](double th, double) { return legendre(2, std::cos(th)); };
    }
    if (name == "y3_zonal") {
        return [](double th, double) { return legendre(3, std::cos(th)); };
    }
    if (name == "bump") {
        // Gaussian cap about (theta0, phi0); entire in cos(gamma), hence smooth.
        return [](double th, double ph) {
            const double th0 = std::numbers::pi / 3.0, ph0 = 0.8, s2 = 0.35 * 0.35;
            const double cosg = std::sin(th) * std::sin(th0) * std::cos(ph - ph0) +
                                std::cos(th) * std::cos(th0);
            return std::exp(-(1.0 - cosg) / s2);
        };
    }
    if (name == "bandlimited") return bandlimited_profile(seed);
    throw invalid_input("unknown profile '" + name + "'");
}

RadialGraph make_perturbed_graph(double radius, double eps, const Profile& profile,
                                 GridPtr grid, Ambient ambient) {
    if (!(eps >= 0.0)) throw invalid_input("make_perturbed_graph: eps must be >= 0");
    if (!radius_admissible(ambient, radius))
        throw invalid_input("make_perturbed_graph: radius outside the admissible range");
    if (!radius_admissible(ambient, radius * (1.0 - eps)) && eps > 0.0)
        throw invalid_input("make_perturbed_graph: radius*(1-eps) leaves the admissible range");
    if (!grid) throw invalid_input("make_perturbed_graph: missing grid");

    RadialGraph g;
    g.grid = grid;
    g.ambient = ambient;
    g.u.resize(grid->size());
    for (int a = 0; a < grid->n_theta; ++a)
        for (int b = 0; b < grid->n_phi; ++b)
            g.u[grid->idx(a, b)] =
                radius * (1.0 + eps * profile(grid->theta[a], grid->phi[b]));
    validate_graph(g);
    return g;
}

RadialGraph make_perturbed_graph(double radius, double eps, const std::string& profile,
                                 std::uint64_t seed, GridPtr grid, Ambient ambient) {
    return make_perturbed_graph(radius, eps, make_profile(profile, seed), std::move(grid),
                                ambient);
}

RadialGraph make_graph_from_function(GridPtr grid, Ambient ambient, const Profile& radial) {
    if (!grid) throw invalid_input("make_graph_from_function: missing grid");
    RadialGraph g;
    g.grid = grid;
    g.ambient = ambient;
    g.u.resize(grid->size());
    for (int a = 0; a < grid->n_theta; ++a)
        for (int b = 0; b < grid->n_phi; ++b)
            g.u[grid->idx(a, b)] = radial(grid->theta[a], grid->phi[b]);
    validate_graph(g);
    return g;
}

RadialGraph make_generic_flow_graph(GridPtr grid, Ambient ambient, std::uint64_t seed) {
    double d2 = 0.0, d3 = 0.0;
    if (seed != 0) {
        SplitMix64 rng(seed);
        d2 = 2.0 * std::numbers::pi * rng.next_unit();
        d3 = 2.0 * std::numbers::pi * rng.next_unit();
    }
    return make_graph_from_function(std::move(grid), ambient, [d2, d3](double th, double ph) {
        const double s = std::sin(th);
        return 2.0 + 0.3 * s * s * std::cos(2.0 * (ph - d2)) +
               0.15 * s * s * s * std::cos(3.0 * (ph - d3));
    });
}

}  // namespace umb
