#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umbilab/flow.hpp"
#include "umbilab/measures.hpp"

namespace umb {

struct SweepConfig {
    std::string profile = "y2";
    std::uint64_t seed = 0;
    std::vector<double> eps;  // strictly increasing, all >= 0
    double p = 4.0;           // > n
    int n_theta = 64;
    int n_phi = 128;
    double radius = 1.0;
    bool include_lambda1 = true;
    // Records with d_H below 10x this floor are excluded from the log-log fit.
    double hausdorff_floor = 1e-9;

    static std::vector<double> log_spaced(double lo, double hi, int count);
};

struct PinchRecord {
    double eps = 0.0;
    double area = 0.0;
    double A_norm_p = 0.0;       // ||A°||_p
    double H_norm_p = 0.0;       // ||H_avg||_p
    double A_sup = 0.0;          // ||A°||_inf
    double d_H = 0.0;            // best-fit sphere distance
    double R_fit = 0.0;
    double lambda_star = 0.0;
    double perez_residual = 0.0;
    double perez_ratio = 0.0;    // residual / ||A°||_p
    double lambda1 = 0.0;
    double ricci_deficit = 0.0;
    double aubry_ratio = 0.0;    // deficit / (||H||_p ||A°||_p)
    double andrews = 0.0;        // nan when not convex
    double andrews_ratio = 0.0;  // deviation / (|M| ||A°||_inf), nan likewise
    double v_max = 0.0;
    double v_bound = 0.0;
    bool v_bound_holds = false;
    bool convex = false;
    double osc = 0.0;
};

// Pinching sweep at unit area (Theorem-style normalization |M| = 1 by
// homothety before every record).  alpha_emp is the log-log slope of d_H
// against ||A°||_p over records above the floor; c_emp the smallest constant
// closing d_H <= R (c ||A°||_p / ||H||_p)^alpha across those records.
struct PinchReport {
    SweepConfig config;
    std::vector<PinchRecord> records;
    double alpha_emp = 0.0;
    double c_emp = 0.0;
    double eps0_emp = 0.0;  // largest eps with every boolean check passing
    LineFit fit;
};

PinchReport pinch_sweep(const SweepConfig& config);

struct OptimalityConfig {
    int n_theta = 64;
    int n_phi = 128;
    std::uint64_t seed = 0;
    FlowControls controls;      // t_end defaults to 10
    double fit_lo = 5.0;
    double fit_hi = 10.0;
    double slope_tol = 0.10;    // relative band around the expected slopes
    double band_c = 2.0;        // allowed max/min of d~_H / ||A°~|| in window
    double alpha_probe = 1.5;   // exponent whose ratio must grow
};

struct DecayReport {
    OptimalityConfig config;
    FlowDiagnostics diagnostics;
    std::map<std::string, LineFit> fits;
    double slope_A_hyp = 0.0;    // expected -2/n
    double slope_A_ball = 0.0;   // expected -1/n
    double slope_dH_S2 = 0.0;    // expected -1/n
    bool slopes_pass = false;
    double what_lo = 0.0, what_hi = 0.0;
    bool what_positive = false;
    double ratio_min = 0.0, ratio_max = 0.0;  // d~_H / ||A°~||_inf over window
    bool ratio_band_pass = false;
    std::vector<double> alpha_probe_ratio;    // d~_H / ||A°~||^alpha, window samples
    bool alpha_probe_monotone = false;
    bool pass = false;
};

DecayReport optimality_run(const OptimalityConfig& config);

}  // namespace umb
