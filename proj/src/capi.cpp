#include "umbilab.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "umbilab/conformal.hpp"
#include "umbilab/errors.hpp"
#include "umbilab/io.hpp"
#include "umbilab/laplace.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
umb_status guarded(Fn&& fn) {
    try {
        fn();
        return UMB_OK;
    } catch (const umb::invalid_input& e) {
        set_error(e.what());
        return UMB_ERR_INVALID;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return UMB_ERR_INVALID;
    } catch (const umb::numerical_error& e) {
        set_error(e.what());
        return UMB_ERR_NUMERIC;
    } catch (const umb::io_error& e) {
        set_error(e.what());
        return UMB_ERR_IO;
    } catch (const std::exception& e) {
        set_error(e.what());
        return UMB_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

using umb::Json;

std::pair<int, int> parse_grid_spec(const Json& j) {
    int nt = 64, np = 128;
    if (j.contains("grid")) {
        const Json& g = j.at("grid");
        if (g.is_string()) {
            const std::string s = g.get<std::string>();
            const auto x = s.find('x');
            if (x == std::string::npos) throw umb::invalid_input("grid spec must be NxM");
            nt = std::stoi(s.substr(0, x));
            np = std::stoi(s.substr(x + 1));
        } else {
            nt = g.at("n_theta").get<int>();
            np = g.at("n_phi").get<int>();
        }
    }
    return {nt, np};
}

umb::RadialGraph graph_from_spec(const Json& spec, const Json& config, const char* key) {
    if (!spec.is_null() && spec.is_string()) return umb::load_graph(spec.get<std::string>());
    const auto [nt, np] = parse_grid_spec(config);
    const umb::GridPtr grid = umb::build_grid(nt, np);
    umb::Ambient ambient = umb::Ambient::Euclidean;
    if (config.contains("ambient"))
        ambient = umb::ambient_from_name(config.at("ambient").get<std::string>());
    if (spec.is_null()) throw umb::invalid_input(std::string("missing '") + key + "'");
    const std::string kind = spec.value("kind", "sphere");
    if (kind == "sphere")
        return umb::make_sphere_graph(spec.value("R", 1.0), grid, ambient);
    if (kind == "perturbed")
        return umb::make_perturbed_graph(spec.value("R", 1.0), spec.value("eps", 0.1),
                                         spec.value("profile", std::string("y2")),
                                         spec.value("seed", 0ULL), grid, ambient);
    if (kind == "generic") return umb::make_generic_flow_graph(grid, ambient, spec.value("seed", 0ULL));
    throw umb::invalid_input("unknown preset kind '" + kind + "'");
}

}  // namespace

struct umb_grid {
    umb::GridPtr grid;
};
struct umb_graph {
    umb::RadialGraph graph;
};
struct umb_bundle {
    umb::CurvatureBundle bundle;
};

extern "C" {

const char* umb_version(void) { return "0.1.0"; }

const char* umb_last_error(void) { return g_last_error.c_str(); }

void umb_string_free(char* s) { std::free(s); }

umb_status umb_grid_create(int n_theta, int n_phi, umb_grid** out) {
    if (!out) return UMB_ERR_INVALID;
    return guarded([&] { *out = new umb_grid{umb::build_grid(n_theta, n_phi)}; });
}

void umb_grid_destroy(umb_grid* g) { delete g; }

int umb_grid_n_theta(const umb_grid* g) { return g ? g->grid->n_theta : 0; }
int umb_grid_n_phi(const umb_grid* g) { return g ? g->grid->n_phi : 0; }

umb_status umb_grid_weight_sum(const umb_grid* g, double* out) {
    if (!g || !out) return UMB_ERR_INVALID;
    return guarded([&] { *out = g->grid->weight_sum(); });
}

umb_status umb_graph_sphere(const umb_grid* g, const char* ambient, double radius,
                            umb_graph** out) {
    if (!g || !ambient || !out) return UMB_ERR_INVALID;
    return guarded([&] {
        *out = new umb_graph{
            umb::make_sphere_graph(radius, g->grid, umb::ambient_from_name(ambient))};
    });
}

umb_status umb_graph_perturbed(const umb_grid* g, const char* ambient, double radius,
                               double eps, const char* profile, unsigned long long seed,
                               umb_graph** out) {
    if (!g || !ambient || !profile || !out) return UMB_ERR_INVALID;
    return guarded([&] {
        *out = new umb_graph{umb::make_perturbed_graph(radius, eps, profile, seed, g->grid,
                                                       umb::ambient_from_name(ambient))};
    });
}

umb_status umb_graph_generic(const umb_grid* g, const char* ambient, unsigned long long seed,
                             umb_graph** out) {
    if (!g || !ambient || !out) return UMB_ERR_INVALID;
    return guarded([&] {
        *out = new umb_graph{
            umb::make_generic_flow_graph(g->grid, umb::ambient_from_name(ambient), seed)};
    });
}

umb_status umb_graph_load(const char* path, umb_graph** out) {
    if (!path || !out) return UMB_ERR_INVALID;
    return guarded([&] { *out = new umb_graph{umb::load_graph(path)}; });
}

umb_status umb_graph_save(const umb_graph* gr, const char* path) {
    if (!gr || !path) return UMB_ERR_INVALID;
    return guarded([&] { umb::save_graph(gr->graph, path); });
}

void umb_graph_destroy(umb_graph* gr) { delete gr; }

int umb_graph_n_theta(const umb_graph* gr) { return gr ? gr->graph.grid->n_theta : 0; }
int umb_graph_n_phi(const umb_graph* gr) { return gr ? gr->graph.grid->n_phi : 0; }

const double* umb_graph_u(const umb_graph* gr) { return gr ? gr->graph.u.data() : nullptr; }

umb_status umb_graph_convert(const umb_graph* gr, const char* to, umb_graph** out) {
    if (!gr || !to || !out) return UMB_ERR_INVALID;
    return guarded([&] {
        const std::string target(to);
        if (target == "ball")
            *out = new umb_graph{umb::graph_to_ball(gr->graph)};
        else if (target == "hyperbolic")
            *out = new umb_graph{umb::ball_to_graph(gr->graph)};
        else
            throw umb::invalid_input("convert target must be 'ball' or 'hyperbolic'");
    });
}

umb_status umb_bundle_create(const umb_graph* gr, umb_bundle** out) {
    if (!gr || !out) return UMB_ERR_INVALID;
    return guarded([&] { *out = new umb_bundle{umb::curvature_from_graph(gr->graph)}; });
}

void umb_bundle_destroy(umb_bundle* b) { delete b; }

umb_status umb_bundle_scalar(const umb_bundle* b, const char* name, double* out) {
    if (!b || !name || !out) return UMB_ERR_INVALID;
    return guarded([&] {
        const std::string n(name);
        const umb::CurvatureBundle& bb = b->bundle;
        auto minmax = [](const std::vector<double>& v) {
            return std::minmax_element(v.begin(), v.end());
        };
        if (n == "H_min")
            *out = *minmax(bb.H_sum).first;
        else if (n == "H_max")
            *out = *minmax(bb.H_sum).second;
        else if (n == "H_avg_min")
            *out = *minmax(bb.H_avg).first;
        else if (n == "H_avg_max")
            *out = *minmax(bb.H_avg).second;
        else if (n == "v_max")
            *out = *minmax(bb.v).second;
        else if (n == "area")
            *out = umb::area(bb);
        else if (n == "sup_A_traceless")
            *out = umb::tensor_sup_norm(bb.A_traceless, bb);
        else
            throw umb::invalid_input("unknown bundle scalar '" + n + "'");
    });
}

umb_status umb_bundle_lp_norm(const umb_bundle* b, const char* tensor, double p, double* out) {
    if (!b || !tensor || !out) return UMB_ERR_INVALID;
    return guarded([&] {
        const std::string n(tensor);
        const umb::CurvatureBundle& bb = b->bundle;
        const umb::TensorField* t = nullptr;
        if (n == "A_traceless")
            t = &bb.A_traceless;
        else if (n == "h")
            t = &bb.h;
        else if (n == "g")
            t = &bb.g;
        else
            throw umb::invalid_input("unknown tensor '" + n + "'");
        *out = p <= 0.0 ? umb::tensor_sup_norm(*t, bb) : umb::tensor_lp_norm(*t, bb, p);
    });
}

umb_status umb_bundle_lambda1(const umb_bundle* b, double* out) {
    if (!b || !out) return UMB_ERR_INVALID;
    return guarded([&] { *out = umb::lambda1_estimate(b->bundle); });
}

umb_status umb_sphere_flow_radius(double r0, int n, const char* ambient, double t,
                                  double* out) {
    if (!ambient || !out) return UMB_ERR_INVALID;
    return guarded(
        [&] { *out = umb::sphere_flow_oracle(r0, n, umb::ambient_from_name(ambient), t); });
}

umb_status umb_run_analyze(const char* config_json, char** report_json) {
    if (!config_json || !report_json) return UMB_ERR_INVALID;
    return guarded([&] {
        const Json cfg = Json::parse(config_json);
        const umb::RadialGraph graph =
            graph_from_spec(cfg.contains("input") ? cfg.at("input") : Json(), cfg, "input");
        std::vector<double> ps = {2.0, 4.0};
        if (cfg.contains("p")) ps = cfg.at("p").get<std::vector<double>>();
        const Json report = umb::analysis_report(graph, ps, cfg.value("lambda1", true));
        const std::string text = report.dump(2) + "\n";
        if (cfg.contains("report"))
            umb::write_text_file(cfg.at("report").get<std::string>(), text);
        *report_json = dup_string(text);
    });
}

umb_status umb_run_flow(const char* config_json, char** report_json) {
    if (!config_json || !report_json) return UMB_ERR_INVALID;
    return guarded([&] {
        Json cfg = Json::parse(config_json);
        if (!cfg.contains("ambient")) cfg["ambient"] = "hyperbolic";
        const umb::RadialGraph initial =
            graph_from_spec(cfg.contains("initial") ? cfg.at("initial") : Json(), cfg,
                            "initial");
        umb::FlowControls ctl;
        ctl.t_end = cfg.value("t_end", 10.0);
        ctl.cfl = cfg.value("cfl", 0.2);
        ctl.sample_every = cfg.value("sample_every", 0.1);
        ctl.dt_max = cfg.value("dt_max", 0.05);
        const umb::FlowDiagnostics diag = umb::run_flow(initial, ctl);

        if (cfg.contains("csv"))
            umb::write_text_file(cfg.at("csv").get<std::string>(), umb::diagnostics_csv(diag));

        Json report;
        report["ambient"] = cfg.at("ambient");
        report["t_end"] = ctl.t_end;
        report["samples"] = diag.samples.size();
        const umb::FlowSample& last = diag.samples.back();
        report["final"] = {{"t", last.t},
                           {"sup_A_trfree_hyp", last.sup_A_trfree_hyp},
                           {"osc_uhat", last.osc_uhat},
                           {"H_min", last.H_min},
                           {"H_max", last.H_max},
                           {"v_max", last.v_max}};
        if (cfg.contains("fit_window")) {
            const auto w = cfg.at("fit_window").get<std::vector<double>>();
            if (w.size() != 2) throw umb::invalid_input("fit_window must be [lo, hi]");
            Json fits;
            for (const auto& [name, fit] : umb::fit_decay_exponents(diag, w[0], w[1]))
                fits[name] = {{"slope", fit.slope},
                              {"intercept", fit.intercept},
                              {"rms_residual", fit.rms_residual},
                              {"n", fit.n}};
            report["fits"] = fits;
        }
        const std::string text = report.dump(2) + "\n";
        if (cfg.contains("report"))
            umb::write_text_file(cfg.at("report").get<std::string>(), text);
        *report_json = dup_string(text);
    });
}

umb_status umb_run_sweep(const char* config_json, char** report_json) {
    if (!config_json || !report_json) return UMB_ERR_INVALID;
    return guarded([&] {
        const Json cfg = Json::parse(config_json);
        umb::SweepConfig sc;
        sc.profile = cfg.value("profile", std::string("y2"));
        sc.seed = cfg.value("seed", 0ULL);
        sc.p = cfg.value("p", 4.0);
        sc.radius = cfg.value("R", 1.0);
        sc.include_lambda1 = cfg.value("lambda1", true);
        const auto [nt, np] = parse_grid_spec(cfg);
        sc.n_theta = nt;
        sc.n_phi = np;
        if (cfg.contains("eps") && cfg.at("eps").is_array()) {
            sc.eps = cfg.at("eps").get<std::vector<double>>();
        } else {
            const Json e = cfg.value("eps", Json::object());
            sc.eps = umb::SweepConfig::log_spaced(e.value("min", 1e-3), e.value("max", 1e-1),
                                                  e.value("count", 12));
        }
        const umb::PinchReport report = umb::pinch_sweep(sc);
        if (cfg.contains("out_dir"))
            umb::emit_pinch_files(report, cfg.at("out_dir").get<std::string>());
        *report_json = dup_string(umb::pinch_report_to_json(report).dump(2) + "\n");
    });
}

umb_status umb_run_optimality(const char* config_json, char** report_json) {
    if (!config_json || !report_json) return UMB_ERR_INVALID;
    return guarded([&] {
        const Json cfg = Json::parse(config_json);
        umb::OptimalityConfig oc;
        const auto [nt, np] = parse_grid_spec(cfg);
        oc.n_theta = nt;
        oc.n_phi = np;
        oc.seed = cfg.value("seed", 0ULL);
        oc.controls.t_end = cfg.value("t_end", 10.0);
        oc.controls.cfl = cfg.value("cfl", 0.2);
        oc.controls.sample_every = cfg.value("sample_every", 0.1);
        oc.controls.dt_max = cfg.value("dt_max", 0.05);
        if (cfg.contains("fit_window")) {
            const auto w = cfg.at("fit_window").get<std::vector<double>>();
            if (w.size() != 2) throw umb::invalid_input("fit_window must be [lo, hi]");
            oc.fit_lo = w[0];
            oc.fit_hi = w[1];
        }
        oc.slope_tol = cfg.value("slope_tol", 0.10);
        oc.band_c = cfg.value("band_c", 2.0);
        oc.alpha_probe = cfg.value("alpha_probe", 1.5);
        const umb::DecayReport report = umb::optimality_run(oc);
        if (cfg.contains("out_dir"))
            umb::emit_decay_files(report, cfg.at("out_dir").get<std::string>());
        *report_json = dup_string(umb::decay_report_to_json(report).dump(2) + "\n");
    });
}

umb_status umb_run_convert(const char* config_json, char** report_json) {
    if (!config_json || !report_json) return UMB_ERR_INVALID;
    return guarded([&] {
        const Json cfg = Json::parse(config_json);
        if (!cfg.contains("input")) throw umb::invalid_input("convert: missing 'input'");
        const umb::RadialGraph in = umb::load_graph(cfg.at("input").get<std::string>());
        const std::string to = cfg.value("to", std::string("ball"));
        umb::RadialGraph outg =
            to == "ball" ? umb::graph_to_ball(in)
                         : (to == "hyperbolic" ? umb::ball_to_graph(in)
                                               : throw umb::invalid_input(
                                                     "convert target must be 'ball' or "
                                                     "'hyperbolic'"));
        if (cfg.contains("out")) umb::save_graph(outg, cfg.at("out").get<std::string>());

        const umb::RadialGraph& ball = to == "ball" ? outg : in;
        const umb::ConformalFrame frame = umb::frame_for_ball_graph(ball);
        Json report;
        report["to"] = to;
        report["psi_max"] = frame.psi_max;
        report["e_psi_max"] = std::exp(frame.psi_max);
        if (cfg.contains("ref_radius")) {
            const double r_ref = cfg.at("ref_radius").get<double>();
            const double rho_ref = umb::r_to_rho(r_ref);
            const umb::RadialGraph& hyp = to == "ball" ? in : outg;
            const double d_ball = umb::hausdorff_to_sphere(ball, {0, 0, 0}, rho_ref);
            report["ref_radius"] = r_ref;
            report["ref_radius_ball"] = rho_ref;
            report["hausdorff_ball"] = d_ball;
            report["hausdorff_hyperbolic"] = umb::hausdorff_to_sphere(hyp, {0, 0, 0}, r_ref);
            report["hausdorff_transfer_bound"] = umb::hausdorff_transfer(d_ball, frame);
        }
        const std::string text = report.dump(2) + "\n";
        if (cfg.contains("report"))
            umb::write_text_file(cfg.at("report").get<std::string>(), text);
        *report_json = dup_string(text);
    });
}

}  // extern "C"
