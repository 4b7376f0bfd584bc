#include "umbilab/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "umbilab/errors.hpp"
#include "umbilab/laplace.hpp"

namespace umb {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

std::string fmt_p(double p) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

Json json_or_null(double x) {
    if (std::isfinite(x)) return x;
    return nullptr;
}

}  // namespace

Json graph_to_json(const RadialGraph& graph) {
    validate_graph(graph);
    Json j;
    j["ambient"] = ambient_name(graph.ambient);
    j["n_theta"] = graph.grid->n_theta;
    j["n_phi"] = graph.grid->n_phi;
    j["center"] = graph.center;
    j["u"] = graph.u;
    return j;
}

RadialGraph graph_from_json(const Json& j) {
    for (const char* key : {"ambient", "n_theta", "n_phi", "center", "u"})
        if (!j.contains(key)) throw io_error(std::string("graph json: missing key '") + key + "'");
    RadialGraph g;
    g.ambient = ambient_from_name(j.at("ambient").get<std::string>());
    const int nt = j.at("n_theta").get<int>();
    const int np = j.at("n_phi").get<int>();
    g.grid = build_grid(nt, np);
    const auto& c = j.at("center");
    if (!c.is_array() || c.size() != 3) throw io_error("graph json: center must be 3 floats");
    for (int i = 0; i < 3; ++i) g.center[i] = c[i].get<double>();
    g.u = j.at("u").get<std::vector<double>>();
    if (g.u.size() != g.grid->size())
        throw io_error("graph json: u length does not match n_theta * n_phi");
    validate_graph(g);
    return g;
}

void save_graph(const RadialGraph& graph, const std::string& path) {
    write_text_file(path, graph_to_json(graph).dump(2) + "\n");
}

RadialGraph load_graph(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw io_error("graph json: " + std::string(e.what()));
    }
    return graph_from_json(j);
}

Json analysis_report(const RadialGraph& graph, const std::vector<double>& ps,
                     bool with_lambda1) {
    const CurvatureBundle bundle = curvature_from_graph(graph);
    Json j;
    j["ambient"] = ambient_name(graph.ambient);
    j["grid"] = {{"n_theta", graph.grid->n_theta}, {"n_phi", graph.grid->n_phi}};
    j["area"] = area(bundle);
    if (graph.ambient == Ambient::Euclidean) {
        j["x_M"] = area_and_center(graph, bundle).x_M;
    } else {
        j["x_M"] = nullptr;
    }

    Json norms, h_norms;
    for (double p : ps) {
        norms[fmt_p(p)] = tensor_lp_norm(bundle.A_traceless, bundle, p);
        h_norms[fmt_p(p)] = lp_norm_scalar(bundle.H_avg, bundle, p);
    }
    norms["sup"] = tensor_sup_norm(bundle.A_traceless, bundle);
    double h_sup = 0.0;
    for (double h : bundle.H_avg) h_sup = std::max(h_sup, std::abs(h));
    h_norms["sup"] = h_sup;
    j["norms"] = norms;
    j["H_norms"] = h_norms;

    const SphereFit fit = best_fit_sphere(graph);
    j["sphere_fit"] = {{"center", fit.center}, {"radius", fit.radius},
                       {"hausdorff", fit.hausdorff}};

    double p_use = 0.0;
    for (double p : ps) p_use = std::max(p_use, p);
    if (p_use <= 2.0) p_use = 4.0;
    const UmbilicFit uf = best_umbilic_lambda(bundle, p_use);
    j["lambda_star"] = uf.lambda_star;
    j["residual"] = uf.residual;

    if (with_lambda1) j["lambda1"] = lambda1_estimate(bundle);

    if (graph.ambient == Ambient::Euclidean && is_convex(bundle)) {
        j["andrews"] = andrews_deviation(graph, bundle).deviation;
    } else {
        j["andrews"] = nullptr;
    }

    const GradientBound gb = gradient_bound_check(graph, bundle);
    j["v_max"] = gb.v_max;
    j["v_bound"] = gb.bound;
    j["v_bound_holds"] = gb.holds;
    j["osc"] = graph.oscillation();
    return j;
}

Json pinch_report_to_json(const PinchReport& report) {
    Json j;
    j["config"] = {{"profile", report.config.profile},
                   {"seed", report.config.seed},
                   {"eps", report.config.eps},
                   {"p", report.config.p},
                   {"grid", {{"n_theta", report.config.n_theta}, {"n_phi", report.config.n_phi}}},
                   {"R", report.config.radius},
                   {"hausdorff_floor", report.config.hausdorff_floor}};
    Json records = Json::array();
    for (const PinchRecord& r : report.records) {
        records.push_back({{"eps", r.eps},
                           {"area", r.area},
                           {"A_norm_p", r.A_norm_p},
                           {"H_norm_p", r.H_norm_p},
                           {"A_sup", r.A_sup},
                           {"d_H", r.d_H},
                           {"R_fit", r.R_fit},
                           {"lambda_star", r.lambda_star},
                           {"perez_residual", r.perez_residual},
                           {"perez_ratio", r.perez_ratio},
                           {"lambda1", r.lambda1},
                           {"ricci_deficit", r.ricci_deficit},
                           {"aubry_ratio", r.aubry_ratio},
                           {"andrews", json_or_null(r.andrews)},
                           {"andrews_ratio", json_or_null(r.andrews_ratio)},
                           {"v_max", r.v_max},
                           {"v_bound", r.v_bound},
                           {"v_bound_holds", r.v_bound_holds},
                           {"convex", r.convex},
                           {"osc", r.osc}});
    }
    j["records"] = records;
    j["alpha_emp"] = report.alpha_emp;
    j["c_emp"] = report.c_emp;
    j["eps0_emp"] = report.eps0_emp;
    j["fit"] = {{"slope", report.fit.slope},
                {"intercept", report.fit.intercept},
                {"rms_residual", report.fit.rms_residual},
                {"n", report.fit.n}};
    return j;
}

Json decay_report_to_json(const DecayReport& report) {
    Json j;
    j["config"] = {{"grid", {{"n_theta", report.config.n_theta}, {"n_phi", report.config.n_phi}}},
                   {"seed", report.config.seed},
                   {"t_end", report.config.controls.t_end},
                   {"cfl", report.config.controls.cfl},
                   {"sample_every", report.config.controls.sample_every},
                   {"dt_max", report.config.controls.dt_max},
                   {"fit_window", {report.config.fit_lo, report.config.fit_hi}},
                   {"slope_tol", report.config.slope_tol},
                   {"band_c", report.config.band_c},
                   {"alpha_probe", report.config.alpha_probe}};
    Json fits;
    for (const auto& [name, fit] : report.fits)
        fits[name] = {{"slope", fit.slope},
                      {"intercept", fit.intercept},
                      {"rms_residual", fit.rms_residual},
                      {"n", fit.n}};
    j["fits"] = fits;
    j["slope_A_hyp"] = report.slope_A_hyp;
    j["slope_A_ball"] = report.slope_A_ball;
    j["slope_dH_S2"] = report.slope_dH_S2;
    j["slopes_pass"] = report.slopes_pass;
    j["what_interval"] = {{"min", report.what_lo},
                          {"max", report.what_hi},
                          {"positive", report.what_positive}};
    j["ratio_band"] = {{"min", report.ratio_min},
                       {"max", report.ratio_max},
                       {"c", report.config.band_c},
                       {"pass", report.ratio_band_pass}};
    j["alpha_probe_ratio"] = report.alpha_probe_ratio;
    j["alpha_probe_monotone"] = report.alpha_probe_monotone;
    j["pass"] = report.pass;
    j["samples"] = report.diagnostics.samples.size();
    return j;
}

std::string diagnostics_csv(const FlowDiagnostics& diag) {
    std::ostringstream out;
    out << kFlowCsvHeader << "\n";
    for (const FlowSample& s : diag.samples) {
        out << fmt(s.t) << ',' << fmt(s.sup_A_trfree_hyp) << ',' << fmt(s.sup_A_trfree_ball)
            << ',' << fmt(s.dH_ball_bestfit) << ',' << fmt(s.dH_ball_S2) << ','
            << fmt(s.osc_uhat) << ',' << fmt(s.what_min) << ',' << fmt(s.what_max) << ','
            << fmt(s.H_min) << ',' << fmt(s.H_max) << ',' << fmt(s.v_max) << ',' << fmt(s.dt)
            << "\n";
    }
    return out.str();
}

std::string plot_series(const std::vector<double>& x, const std::vector<double>& y,
                        const std::string& comment) {
    if (x.size() != y.size()) throw invalid_input("plot_series: length mismatch");
    std::ostringstream out;
    out << "# " << comment << "\n";
    for (std::size_t i = 0; i < x.size(); ++i) out << fmt(x[i]) << ' ' << fmt(y[i]) << "\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out.good()) throw io_error("write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_pinch_files(const PinchReport& report, const std::string& out_dir) {
    const std::filesystem::path dir(out_dir);
    write_text_file((dir / "pinch_report.json").string(),
                    pinch_report_to_json(report).dump(2) + "\n");

    std::ostringstream csv;
    csv << "eps,A_norm_p,H_norm_p,A_sup,d_H,R_fit,lambda_star,perez_residual,perez_ratio,"
           "lambda1,ricci_deficit,aubry_ratio,andrews,andrews_ratio,v_max,v_bound,"
           "v_bound_holds,convex,osc\n";
    for (const PinchRecord& r : report.records) {
        csv << fmt(r.eps) << ',' << fmt(r.A_norm_p) << ',' << fmt(r.H_norm_p) << ','
            << fmt(r.A_sup) << ',' << fmt(r.d_H) << ',' << fmt(r.R_fit) << ','
            << fmt(r.lambda_star) << ',' << fmt(r.perez_residual) << ',' << fmt(r.perez_ratio)
            << ',' << fmt(r.lambda1) << ',' << fmt(r.ricci_deficit) << ','
            << fmt(r.aubry_ratio) << ',' << fmt(r.andrews) << ',' << fmt(r.andrews_ratio)
            << ',' << fmt(r.v_max) << ',' << fmt(r.v_bound) << ',' << (r.v_bound_holds ? 1 : 0)
            << ',' << (r.convex ? 1 : 0) << ',' << fmt(r.osc) << "\n";
    }
    write_text_file((dir / "pinch_records.csv").string(), csv.str());

    std::vector<double> ax, dh;
    for (const PinchRecord& r : report.records) {
        if (r.eps > 0.0 && r.d_H > 0.0) {
            ax.push_back(r.A_norm_p);
            dh.push_back(r.d_H);
        }
    }
    write_text_file((dir / "pinch_dh_vs_A.dat").string(),
                    plot_series(ax, dh, "||A_traceless||_p vs d_H (log-log axes)"));
}

void emit_decay_files(const DecayReport& report, const std::string& out_dir) {
    const std::filesystem::path dir(out_dir);
    write_text_file((dir / "decay_report.json").string(),
                    decay_report_to_json(report).dump(2) + "\n");
    write_text_file((dir / "flow_diagnostics.csv").string(),
                    diagnostics_csv(report.diagnostics));

    std::vector<double> t, a_hyp, a_ball, dh;
    for (const FlowSample& s : report.diagnostics.samples) {
        t.push_back(s.t);
        a_hyp.push_back(s.sup_A_trfree_hyp);
        a_ball.push_back(s.sup_A_trfree_ball);
        dh.push_back(s.dH_ball_S2);
    }
    write_text_file((dir / "decay_sup_A_hyp.dat").string(),
                    plot_series(t, a_hyp, "t vs sup |A_traceless| (semilog axes)"));
    write_text_file((dir / "decay_sup_A_ball.dat").string(),
                    plot_series(t, a_ball, "t vs ball-model sup |A_traceless|"));
    write_text_file((dir / "decay_dH_S2.dat").string(),
                    plot_series(t, dh, "t vs ball-model distance to S_2"));
}

}  // namespace umb
