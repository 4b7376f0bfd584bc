#include "umbilab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "umbilab/errors.hpp"
#include "umbilab/numerics.hpp"

namespace umb {

namespace {

constexpr double kDim = 2.0;

// |T.T|_g at one node, indices raised/lowered with the bundle metric.
double norm2_at(const TensorField& t, const CurvatureBundle& b, std::size_t k) {
    const double* g = b.g.at(k);
    const double* gi = b.g_inv.at(k);
    const double* c = t.at(k);
    switch (t.rank) {
        case 0: return c[0] * c[0];
        case 1: {
            if (t.n_contra == 0)
                return gi[0] * c[0] * c[0] + 2.0 * gi[1] * c[0] * c[1] + gi[3] * c[1] * c[1];
            return g[0] * c[0] * c[0] + 2.0 * g[1] * c[0] * c[1] + g[3] * c[1] * c[1];
        }
        default: {
            if (t.n_contra == 0) {
                // g^{ik} g^{jl} T_ij T_kl
                double s = 0.0;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        for (int kk = 0; kk < 2; ++kk)
                            for (int l = 0; l < 2; ++l)
                                s += gi[2 * i + kk] * gi[2 * j + l] * c[2 * i + j] *
                                     c[2 * kk + l];
                return s;
            }
            if (t.n_contra == 2) {
                double s = 0.0;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        for (int kk = 0; kk < 2; ++kk)
                            for (int l = 0; l < 2; ++l)
                                s += g[2 * i + kk] * g[2 * j + l] * c[2 * i + j] * c[2 * kk + l];
                return s;
            }
            // (1,1): T^i_j T^k_l g_ik g^{jl}
            double s = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int kk = 0; kk < 2; ++kk)
                        for (int l = 0; l < 2; ++l)
                            s += g[2 * i + kk] * gi[2 * j + l] * c[2 * i + j] * c[2 * kk + l];
            return s;
        }
    }
}

void check_compatible(const TensorField& t, const CurvatureBundle& b, const char* who) {
    if (!t.grid || t.grid->size() != b.grid->size() || t.grid->n_theta != b.grid->n_theta ||
        t.grid->n_phi != b.grid->n_phi)
        throw invalid_input(std::string(who) + ": tensor and bundle live on different grids");
}

std::vector<double> node_measure(const CurvatureBundle& b) {
    std::vector<double> m(b.grid->size());
    for (std::size_t k = 0; k < m.size(); ++k)
        m[k] = b.area_element[k] * b.grid->weight[k];
    return m;
}

// Distance from q (relative to the graph center) to every node point.
std::vector<double> node_distances(const RadialGraph& graph, const AmbientPoint& q) {
    const SphericalGrid& grid = *graph.grid;
    std::vector<double> d(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        d[k] = ambient_distance(graph.ambient, q, graph.u[k], grid.direction(k));
    return d;
}

// Directional derivative nu(d_q) at every node; positive everywhere is the
// star-center criterion used by the re-centered measures.
bool is_star_center(const RadialGraph& graph, const CurvatureBundle& bundle,
                    const AmbientPoint& q) {
    const SphericalGrid& grid = *graph.grid;
    const double rq = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
    if (rq == 0.0) return true;  // the graph center itself
    for (int a = 0; a < grid.n_theta; ++a) {
        for (int bb = 0; bb < grid.n_phi; ++bb) {
            const std::size_t k = grid.idx(a, bb);
            const double* w = grid.direction(k);
            const double r = graph.u[k];
            const double cosg =
                std::clamp((q[0] * w[0] + q[1] * w[1] + q[2] * w[2]) / rq, -1.0, 1.0);
            // D = distance(q, (r, omega)); partials from the law of cosines.
            double dD_dr, dD_dc;
            switch (graph.ambient) {
                case Ambient::Euclidean: {
                    const double D =
                        std::sqrt(std::max(1e-300, r * r + rq * rq - 2.0 * r * rq * cosg));
                    dD_dr = (r - rq * cosg) / D;
                    dD_dc = -r * rq / D;
                    break;
                }
                case Ambient::Hyperbolic: {
                    const double ch =
                        std::cosh(r) * std::cosh(rq) - std::sinh(r) * std::sinh(rq) * cosg;
                    const double sh = std::sqrt(std::max(1e-300, ch * ch - 1.0));
                    dD_dr = (std::sinh(r) * std::cosh(rq) -
                             std::cosh(r) * std::sinh(rq) * cosg) /
                            sh;
                    dD_dc = -std::sinh(r) * std::sinh(rq) / sh;
                    break;
                }
                default: {
                    const double cd =
                        std::cos(r) * std::cos(rq) + std::sin(r) * std::sin(rq) * cosg;
                    const double sd = std::sqrt(std::max(1e-300, 1.0 - cd * cd));
                    dD_dr =
                        (std::sin(r) * std::cos(rq) - std::cos(r) * std::sin(rq) * cosg) / sd;
                    dD_dc = -std::sin(r) * std::sin(rq) / sd;
                    break;
                }
            }
            // Angular derivatives of cos(gamma) = omega . q/|q|.
            const double st = grid.sin_theta[a], ct = grid.cos_theta[a];
            const double cp = std::cos(grid.phi[bb]), sp = std::sin(grid.phi[bb]);
            const double et[3] = {ct * cp, ct * sp, -st};
            const double ep[3] = {-sp, cp, 0.0};
            const double dc_dth = (et[0] * q[0] + et[1] * q[1] + et[2] * q[2]) / rq;
            const double dc_dph = st * (ep[0] * q[0] + ep[1] * q[1] + ep[2] * q[2]) / rq;
            const double* nu = &bundle.normal[3 * k];
            const double deriv =
                nu[0] * dD_dr + nu[1] * dD_dc * dc_dth + nu[2] * dD_dc * dc_dph;
            if (!(deriv > 0.0)) return false;
        }
    }
    return true;
}

bool is_center(const AmbientPoint& q) {
    return q[0] == 0.0 && q[1] == 0.0 && q[2] == 0.0;
}

}  // namespace

double tensor_lp_norm(const TensorField& t, const CurvatureBundle& bundle, double p) {
    check_compatible(t, bundle, "tensor_lp_norm");
    if (!(p >= 1.0)) throw invalid_input("tensor_lp_norm: p must be >= 1");
    const std::size_t n = bundle.grid->size();
    std::vector<double> terms(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double n2 = std::abs(norm2_at(t, bundle, k));
        terms[k] = std::pow(n2, 0.5 * p) * bundle.area_element[k] * bundle.grid->weight[k];
    }
    return std::pow(pairwise_sum(terms), 1.0 / p);
}

double tensor_sup_norm(const TensorField& t, const CurvatureBundle& bundle) {
    check_compatible(t, bundle, "tensor_sup_norm");
    double sup = 0.0;
    for (std::size_t k = 0; k < bundle.grid->size(); ++k)
        sup = std::max(sup, std::sqrt(std::abs(norm2_at(t, bundle, k))));
    return sup;
}

double lp_norm_scalar(std::span<const double> f, const CurvatureBundle& bundle, double p) {
    if (f.size() != bundle.grid->size()) throw invalid_input("lp_norm_scalar: size mismatch");
    if (!(p >= 1.0)) throw invalid_input("lp_norm_scalar: p must be >= 1");
    std::vector<double> terms(f.size());
    for (std::size_t k = 0; k < f.size(); ++k)
        terms[k] = std::pow(std::abs(f[k]), p) * bundle.area_element[k] * bundle.grid->weight[k];
    return std::pow(pairwise_sum(terms), 1.0 / p);
}

double area(const CurvatureBundle& bundle) { return pairwise_sum(node_measure(bundle)); }

AreaCenter area_and_center(const RadialGraph& graph, const CurvatureBundle& bundle) {
    AreaCenter ac;
    ac.area = area(bundle);
    if (graph.ambient != Ambient::Euclidean)
        throw invalid_input("area_and_center: center of mass needs the Euclidean ambient");
    const std::vector<double> x = embed_euclidean(graph);
    const std::vector<double> m = node_measure(bundle);
    std::vector<double> terms(m.size());
    for (int i = 0; i < 3; ++i) {
        for (std::size_t k = 0; k < m.size(); ++k) terms[k] = x[3 * k + i] * m[k];
        ac.x_M[i] = pairwise_sum(terms) / ac.area;
    }
    return ac;
}

double rescale_to_unit_area(RadialGraph& graph) {
    if (graph.ambient != Ambient::Euclidean)
        throw invalid_input("rescale_to_unit_area: homothety needs the Euclidean ambient");
    const CurvatureBundle b = curvature_from_graph(graph);
    const double s = 1.0 / std::sqrt(area(b));
    for (double& u : graph.u) u *= s;
    for (double& c : graph.center) c *= s;
    return s;
}

UmbilicFit best_umbilic_lambda(const CurvatureBundle& bundle, double p, double lambda_tol) {
    if (!(p > kDim)) throw invalid_input("best_umbilic_lambda: requires p > n");
    const std::size_t n = bundle.grid->size();
    double lo = bundle.H_avg[0], hi = bundle.H_avg[0];
    for (double hmean : bundle.H_avg) {
        lo = std::min(lo, hmean);
        hi = std::max(hi, hmean);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw numerical_error("best_umbilic_lambda: degenerate bracket");

    // Pointwise |h - lambda g|^2 = |A°|^2 + n (H_avg - lambda)^2; the map
    // lambda -> norm is convex with its minimum inside [min H, max H].
    std::vector<double> a2(n);
    for (std::size_t k = 0; k < n; ++k)
        a2[k] = std::abs(norm2_at(bundle.A_traceless, bundle, k));
    std::vector<double> terms(n);
    auto objective = [&](double lambda) {
        for (std::size_t k = 0; k < n; ++k) {
            const double dev = bundle.H_avg[k] - lambda;
            terms[k] = std::pow(a2[k] + kDim * dev * dev, 0.5 * p) * bundle.area_element[k] *
                       bundle.grid->weight[k];
        }
        return std::pow(pairwise_sum(terms), 1.0 / p);
    };
    UmbilicFit fit;
    fit.lambda_star =
        (hi - lo <= lambda_tol) ? 0.5 * (lo + hi) : golden_section_min(objective, lo, hi, lambda_tol);
    fit.residual = objective(fit.lambda_star);
    return fit;
}

double hausdorff_to_sphere(const RadialGraph& graph, const AmbientPoint& q, double radius) {
    if (!radius_admissible(graph.ambient, radius))
        throw invalid_input("hausdorff_to_sphere: radius outside the admissible range");
    if (!is_center(q)) {
        const CurvatureBundle b = curvature_from_graph(graph);
        if (!is_star_center(graph, b, q))
            throw invalid_input("hausdorff_to_sphere: q is not a star center of the graph");
    }
    const std::vector<double> d = node_distances(graph, q);
    double sup = 0.0;
    for (double dk : d) sup = std::max(sup, std::abs(dk - radius));
    return sup;
}

SphereFit best_fit_sphere(const RadialGraph& graph) {
    SphereFit fit;
    if (graph.ambient == Ambient::Euclidean) {
        const CurvatureBundle b = curvature_from_graph(graph);
        const AreaCenter ac = area_and_center(graph, b);
        for (int i = 0; i < 3; ++i) fit.center[i] = ac.x_M[i] - graph.center[i];
        if (!is_center(fit.center) && !is_star_center(graph, b, fit.center))
            throw invalid_input("best_fit_sphere: center of mass is not a star center");
    }
    const std::vector<double> d = node_distances(graph, fit.center);
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    fit.radius = 0.5 * (*lo + *hi);
    fit.hausdorff = 0.5 * (*hi - *lo);
    return fit;
}

double oscillation_about(const RadialGraph& graph, const AmbientPoint& q) {
    if (!is_center(q)) {
        const CurvatureBundle b = curvature_from_graph(graph);
        if (!is_star_center(graph, b, q))
            throw invalid_input("oscillation_about: q is not a star center of the graph");
    }
    const std::vector<double> d = node_distances(graph, q);
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    return *hi - *lo;
}

GradientBound gradient_bound_check(const RadialGraph& graph, const CurvatureBundle& bundle,
                                   std::optional<double> kappa_bar) {
    GradientBound gb;
    gb.v_max = *std::max_element(bundle.v.begin(), bundle.v.end());
    const double umax = graph.u_max();
    if (kappa_bar) {
        gb.kappa_bar = *kappa_bar;
    } else {
        // Lower bound of the slice principal curvature warp'/warp over the
        // occupied radial range; warp'/warp is decreasing in r in all three
        // ambients, so the bound sits at max u.
        gb.kappa_bar = warp_prime(graph.ambient, umax) / warp(graph.ambient, umax);
    }
    gb.bound = std::exp(gb.kappa_bar * graph.oscillation());
    gb.holds = gb.v_max <= gb.bound;
    return gb;
}

SupportDeviation andrews_deviation(const RadialGraph& graph, const CurvatureBundle& bundle) {
    if (graph.ambient != Ambient::Euclidean)
        throw invalid_input("andrews_deviation: Euclidean ambient required");
    if (!is_convex(bundle)) throw invalid_input("andrews_deviation: surface is not convex");

    const SphericalGrid& grid = *graph.grid;
    const std::vector<double> x = embed_euclidean(graph);
    const std::vector<double> nu = normal_cartesian(graph, bundle);
    const std::size_t n = grid.size();

    // Steiner point from the support function sampled on the grid directions:
    // q = (3 / 4 pi) * integral h_K(omega) omega dsigma.
    SupportDeviation out;
    std::vector<double> support(n);
    for (std::size_t b = 0; b < n; ++b) {
        const double* w = grid.direction(b);
        double hk = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < n; ++k)
            hk = std::max(hk, x[3 * k] * w[0] + x[3 * k + 1] * w[1] + x[3 * k + 2] * w[2]);
        support[b] = hk;
    }
    std::vector<double> terms(n);
    for (int i = 0; i < 3; ++i) {
        for (std::size_t b = 0; b < n; ++b)
            terms[b] = support[b] * grid.direction(b)[i] * grid.weight[b];
        out.steiner[i] = 3.0 / (4.0 * std::numbers::pi) * pairwise_sum(terms);
    }

    // Sum-convention curvature integral; the round sphere forces this choice:
    // <x - q, nu> = R and (1/8 pi) * (2/R) * 4 pi R^2 = R.
    for (std::size_t k = 0; k < n; ++k)
        terms[k] = bundle.H_sum[k] * bundle.area_element[k] * grid.weight[k];
    out.mean_curvature_integral = pairwise_sum(terms) / (8.0 * std::numbers::pi);

    double dev = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double inner = (x[3 * k] - out.steiner[0]) * nu[3 * k] +
                             (x[3 * k + 1] - out.steiner[1]) * nu[3 * k + 1] +
                             (x[3 * k + 2] - out.steiner[2]) * nu[3 * k + 2];
        dev = std::max(dev, std::abs(inner - out.mean_curvature_integral));
    }
    out.deviation = dev;
    return out;
}

double ricci_pinching_deficit(const CurvatureBundle& bundle, double p, double h_norm_p) {
    if (!(p > kDim)) throw invalid_input("ricci_pinching_deficit: requires p > n");
    TensorField ric = ricci_from_gauss(bundle);
    const double c = (kDim - 1.0) * h_norm_p * h_norm_p;
    for (std::size_t k = 0; k < bundle.grid->size(); ++k) {
        const double* g = bundle.g.at(k);
        double* r = ric.at(k);
        for (int i = 0; i < 4; ++i) r[i] -= c * g[i];
    }
    return tensor_lp_norm(ric, bundle, 0.5 * p);
}

}  // namespace umb
