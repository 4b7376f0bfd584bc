#pragma once

#include <map>
#include <string>
#include <vector>

#include "umbilab/curvature.hpp"
#include "umbilab/numerics.hpp"

namespace umb {

struct FlowControls {
    double cfl = 0.2;           // in (0, 1)
    double t_end = 10.0;
    double sample_every = 0.1;  // diagnostic cadence
    double dt_max = 0.05;       // accuracy cap on top of the CFL heuristic
    bool regrid = false;        // fixed grid; kept as an explicit switch
};

// One step of state for the expanding flow dx/dt = nu / H_sum, reduced to the
// scalar graph equation du/dt = v / H_sum.  Mean-convexity (H_sum > 0) is an
// invariant; losing it is reported as a numerical failure.
struct FlowState {
    RadialGraph graph;
    double t = 0.0;
    CurvatureBundle bundle;
    double dt_last = 0.0;
};

struct FlowSample {
    double t = 0.0;
    double sup_A_trfree_hyp = 0.0;
    double sup_A_trfree_ball = 0.0;  // nan outside the hyperbolic ambient
    double dH_ball_bestfit = 0.0;    // nan outside the hyperbolic ambient
    double dH_ball_S2 = 0.0;         // nan outside the hyperbolic ambient
    double osc_uhat = 0.0;
    double what_min = 0.0;           // nan outside the hyperbolic ambient
    double what_max = 0.0;           // nan outside the hyperbolic ambient
    double H_min = 0.0;
    double H_max = 0.0;
    double v_max = 0.0;
    double dt = 0.0;
};

struct FlowDiagnostics {
    std::vector<FlowSample> samples;
};

FlowState flow_init(RadialGraph initial);

// One explicit RK4 step; dt = min(dt_max, remaining, cfl * H_min * s_min^2 /
// v_max) with s_min the smallest metric grid spacing after the polar cut.
FlowState flow_step(FlowState state, const FlowControls& controls);

// Exact radius of the flowed geodesic sphere: r0 * e^{t/n} (Euclidean),
// arcsinh(sinh(r0) e^{t/n}) (hyperbolic).
double sphere_flow_oracle(double r0, int n, Ambient ambient, double t);

// Time loop with sampling.  Each sample records the direct bundle of the
// current graph and, in the hyperbolic ambient, the Euclidean ball-model
// quantities of the converted graph (mirroring how the conformal comparison
// is used).  Deterministic for fixed inputs.
FlowDiagnostics run_flow(const RadialGraph& initial, const FlowControls& controls);

struct RescaledState {
    std::vector<double> u_hat;  // u - t/n
    std::vector<double> w_hat;  // (2 - w) e^{t/n}, hyperbolic ambient only
};

RescaledState rescale_state(const FlowState& state);

// OLS slope of log(quantity) against t per tracked positive quantity, over
// samples with t in [t_lo, t_hi].  Requires >= 10 samples in the window and
// positive values throughout.
std::map<std::string, LineFit> fit_decay_exponents(const FlowDiagnostics& diag, double t_lo,
                                                   double t_hi);

// Column order of the diagnostics CSV.
extern const char* const kFlowCsvHeader;

}  // namespace umb
