#include "umbilab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "umbilab/conformal.hpp"
#include "umbilab/errors.hpp"
#include "umbilab/laplace.hpp"

namespace umb {

namespace {

constexpr double kDim = 2.0;

void validate(const SweepConfig& c) {
    if (c.eps.empty()) throw invalid_input("sweep: empty eps list");
    for (std::size_t i = 0; i < c.eps.size(); ++i) {
        if (!(c.eps[i] >= 0.0)) throw invalid_input("sweep: eps must be >= 0");
        if (i > 0 && !(c.eps[i] > c.eps[i - 1]))
            throw invalid_input("sweep: eps must be strictly increasing");
    }
    if (!(c.p > kDim)) throw invalid_input("sweep: requires p > n");
    if (!(c.radius > 0.0)) throw invalid_input("sweep: radius must be positive");
}

}  // namespace

std::vector<double> SweepConfig::log_spaced(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2) throw invalid_input("log_spaced: bad range");
    std::vector<double> out(count);
    const double step = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) out[i] = lo * std::exp(i * step);
    return out;
}

PinchReport pinch_sweep(const SweepConfig& config) {
    validate(config);
    PinchReport report;
    report.config = config;
    const GridPtr grid = build_grid(config.n_theta, config.n_phi);
    const Profile profile = make_profile(config.profile, config.seed);

    for (double eps : config.eps) {
        PinchRecord rec;
        rec.eps = eps;
        try {
            RadialGraph graph = make_perturbed_graph(config.radius, eps, profile, grid,
                                                     Ambient::Euclidean);
            rescale_to_unit_area(graph);  // theorem normalization |M| = 1
            const CurvatureBundle bundle = curvature_from_graph(graph);

            rec.area = area(bundle);
            rec.A_norm_p = tensor_lp_norm(bundle.A_traceless, bundle, config.p);
            rec.H_norm_p = lp_norm_scalar(bundle.H_avg, bundle, config.p);
            rec.A_sup = tensor_sup_norm(bundle.A_traceless, bundle);

            const SphereFit fit = best_fit_sphere(graph);
            rec.d_H = fit.hausdorff;
            rec.R_fit = fit.radius;

            const UmbilicFit uf = best_umbilic_lambda(bundle, config.p);
            rec.lambda_star = uf.lambda_star;
            rec.perez_residual = uf.residual;
            rec.perez_ratio = rec.A_norm_p > 0.0 ? uf.residual / rec.A_norm_p : 0.0;

            if (config.include_lambda1) rec.lambda1 = lambda1_estimate(bundle);
            rec.ricci_deficit = ricci_pinching_deficit(bundle, config.p, rec.H_norm_p);
            rec.aubry_ratio = rec.A_norm_p > 0.0
                                  ? rec.ricci_deficit / (rec.H_norm_p * rec.A_norm_p)
                                  : 0.0;

            rec.convex = is_convex(bundle);
            if (rec.convex) {
                const SupportDeviation sd = andrews_deviation(graph, bundle);
                rec.andrews = sd.deviation;
                rec.andrews_ratio =
                    rec.A_sup > 0.0 ? sd.deviation / (rec.area * rec.A_sup) : 0.0;
            } else {
                rec.andrews = std::numeric_limits<double>::quiet_NaN();
                rec.andrews_ratio = std::numeric_limits<double>::quiet_NaN();
            }

            const GradientBound gb = gradient_bound_check(graph, bundle);
            rec.v_max = gb.v_max;
            rec.v_bound = gb.bound;
            rec.v_bound_holds = gb.holds;
            rec.osc = graph.oscillation();
        } catch (const std::exception& e) {
            throw numerical_error("sweep: record at eps = " + std::to_string(eps) +
                                  " failed: " + e.what());
        }
        report.records.push_back(rec);
    }

    // Log-log fit of d_H against ||A°||_p over records clear of the floor.
    std::vector<double> lx, ly;
    for (const PinchRecord& r : report.records) {
        if (r.eps > 0.0 && r.d_H > 10.0 * config.hausdorff_floor && r.A_norm_p > 0.0) {
            lx.push_back(std::log(r.A_norm_p));
            ly.push_back(std::log(r.d_H));
        }
    }
    if (lx.size() >= 2) {
        report.fit = fit_line(lx, ly);
        report.alpha_emp = report.fit.slope;
        double c_emp = 0.0;
        for (const PinchRecord& r : report.records) {
            if (!(r.eps > 0.0) || !(r.d_H > 10.0 * config.hausdorff_floor)) continue;
            c_emp = std::max(c_emp, std::pow(r.d_H / r.R_fit, 1.0 / report.alpha_emp) *
                                        r.H_norm_p / r.A_norm_p);
        }
        report.c_emp = c_emp;
    }

    double eps0 = 0.0;
    for (const PinchRecord& r : report.records) {
        const bool ok = r.v_bound_holds && r.convex;
        if (!ok) break;
        eps0 = r.eps;
    }
    report.eps0_emp = eps0;
    return report;
}

DecayReport optimality_run(const OptimalityConfig& config) {
    DecayReport rep;
    rep.config = config;

    const GridPtr grid = build_grid(config.n_theta, config.n_phi);
    const RadialGraph initial = make_generic_flow_graph(grid, Ambient::Hyperbolic, config.seed);
    rep.diagnostics = run_flow(initial, config.controls);
    rep.fits = fit_decay_exponents(rep.diagnostics, config.fit_lo, config.fit_hi);

    rep.slope_A_hyp = rep.fits.at("sup_A_trfree_hyp").slope;
    rep.slope_A_ball = rep.fits.at("sup_A_trfree_ball").slope;
    rep.slope_dH_S2 = rep.fits.at("dH_ball_S2").slope;
    const double e_hyp = -2.0 / kDim, e_ball = -1.0 / kDim;
    rep.slopes_pass = std::abs(rep.slope_A_hyp - e_hyp) <= config.slope_tol * std::abs(e_hyp) &&
                      std::abs(rep.slope_A_ball - e_ball) <= config.slope_tol * std::abs(e_ball) &&
                      std::abs(rep.slope_dH_S2 - e_ball) <= config.slope_tol * std::abs(e_ball);

    rep.what_lo = std::numeric_limits<double>::infinity();
    rep.what_hi = 0.0;
    rep.ratio_min = std::numeric_limits<double>::infinity();
    rep.ratio_max = 0.0;
    bool monotone = true;
    double prev_probe = 0.0;
    bool first = true;
    for (const FlowSample& s : rep.diagnostics.samples) {
        if (s.t < config.fit_lo - 1e-12 || s.t > config.fit_hi + 1e-12) continue;
        rep.what_lo = std::min(rep.what_lo, s.what_min);
        rep.what_hi = std::max(rep.what_hi, s.what_max);
        const double ratio = s.dH_ball_bestfit / s.sup_A_trfree_ball;
        rep.ratio_min = std::min(rep.ratio_min, ratio);
        rep.ratio_max = std::max(rep.ratio_max, ratio);
        const double probe =
            s.dH_ball_bestfit / std::pow(s.sup_A_trfree_ball, config.alpha_probe);
        rep.alpha_probe_ratio.push_back(probe);
        if (!first && !(probe > prev_probe)) monotone = false;
        prev_probe = probe;
        first = false;
    }
    rep.what_positive = rep.what_lo > 0.0 && std::isfinite(rep.what_hi);
    rep.ratio_band_pass = rep.ratio_min > 0.0 && rep.ratio_max / rep.ratio_min <= config.band_c;
    rep.alpha_probe_monotone = monotone && rep.alpha_probe_ratio.size() >= 2;
    rep.pass =
        rep.slopes_pass && rep.what_positive && rep.ratio_band_pass && rep.alpha_probe_monotone;
    return rep;
}

}  // namespace umb
