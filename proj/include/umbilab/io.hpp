#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "umbilab/experiments.hpp"

namespace umb {

using Json = nlohmann::ordered_json;

// Graph file format: {ambient, n_theta, n_phi, center: [3], u: row-major
// n_theta*n_phi}.  Doubles are serialized at round-trip precision, so
// write -> read is the identity bit for bit.
Json graph_to_json(const RadialGraph& graph);
RadialGraph graph_from_json(const Json& j);
void save_graph(const RadialGraph& graph, const std::string& path);
RadialGraph load_graph(const std::string& path);

// Analysis report: {area, x_M, norms, sphere_fit, lambda_star, residual,
// andrews, v_max, osc, ...}.  norms maps each requested exponent (and "sup")
// to ||A°||; H_norms carries the matching ||H_avg||.
Json analysis_report(const RadialGraph& graph, const std::vector<double>& ps,
                     bool with_lambda1 = true);

Json pinch_report_to_json(const PinchReport& report);
Json decay_report_to_json(const DecayReport& report);

std::string diagnostics_csv(const FlowDiagnostics& diag);

// Two-column whitespace series for gnuplot.
std::string plot_series(const std::vector<double>& x, const std::vector<double>& y,
                        const std::string& comment);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Emits report.json plus CSV tables and log-log plot data under out_dir.
// Byte-stable for identical inputs.
void emit_pinch_files(const PinchReport& report, const std::string& out_dir);
void emit_decay_files(const DecayReport& report, const std::string& out_dir);

}  // namespace umb
