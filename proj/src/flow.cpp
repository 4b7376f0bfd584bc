#include "umbilab/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "umbilab/conformal.hpp"
#include "umbilab/errors.hpp"
#include "umbilab/fd.hpp"
#include "umbilab/measures.hpp"

namespace umb {

namespace {

constexpr int kDim = 2;

void check_mean_convex(const CurvatureBundle& b) {
    for (double h : b.H_sum)
        if (!(h > 0.0))
            throw numerical_error(
                "flow: H_sum lost positivity (the continuous flow stays mean-convex; this "
                "signals a numerics failure)");
}

// du/dt for the current graph.
std::vector<double> speed(const CurvatureBundle& b) {
    std::vector<double> f(b.grid->size());
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = b.v[k] / b.H_sum[k];
    return f;
}

// Smallest metric grid spacing seen by the stepper.  The longitude spacing
// counts only down to the polar-filter cut, which is what actually limits the
// resolved modes.
double min_spacing(const CurvatureBundle& b) {
    const SphericalGrid& grid = *b.grid;
    double s = std::numeric_limits<double>::infinity();
    const int nyquist = grid.n_phi / 2;
    for (int a = 0; a < grid.n_theta; ++a) {
        int m_cut = static_cast<int>(std::floor(0.9 * grid.sin_theta[a] / grid.dtheta));
        m_cut = std::clamp(m_cut, 2, nyquist);
        for (int bb = 0; bb < grid.n_phi; ++bb) {
            const std::size_t k = grid.idx(a, bb);
            const double* g = b.g.at(k);
            s = std::min(s, std::sqrt(g[0]) * grid.dtheta);
            s = std::min(s, std::sqrt(g[3]) * std::numbers::pi / m_cut);
        }
    }
    return s;
}

double stable_dt(const FlowState& st, const FlowControls& c) {
    const double h_min = *std::min_element(st.bundle.H_sum.begin(), st.bundle.H_sum.end());
    const double v_max = *std::max_element(st.bundle.v.begin(), st.bundle.v.end());
    const double s = min_spacing(st.bundle);
    const double dt = c.cfl * h_min * s * s / v_max;
    if (!(dt > 1e-14)) throw numerical_error("flow: time step underflow");
    return std::min(dt, c.dt_max);
}

FlowSample sample_state(const FlowState& st) {
    FlowSample s;
    s.t = st.t;
    s.dt = st.dt_last;
    s.sup_A_trfree_hyp = tensor_sup_norm(st.bundle.A_traceless, st.bundle);
    s.H_min = *std::min_element(st.bundle.H_sum.begin(), st.bundle.H_sum.end());
    s.H_max = *std::max_element(st.bundle.H_sum.begin(), st.bundle.H_sum.end());
    s.v_max = *std::max_element(st.bundle.v.begin(), st.bundle.v.end());
    s.osc_uhat = st.graph.oscillation();  // u - t/n oscillates exactly like u

    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (st.graph.ambient == Ambient::Hyperbolic) {
        const RadialGraph ball = graph_to_ball(st.graph);
        const CurvatureBundle bb = curvature_from_graph(ball);
        s.sup_A_trfree_ball = tensor_sup_norm(bb.A_traceless, bb);
        s.dH_ball_bestfit = best_fit_sphere(ball).hausdorff;
        double wmax = 0.0, what_lo = std::numeric_limits<double>::infinity(), what_hi = 0.0;
        const double growth = std::exp(st.t / kDim);
        for (double w : ball.u) {
            wmax = std::max(wmax, 2.0 - w);
            const double what = (2.0 - w) * growth;
            what_lo = std::min(what_lo, what);
            what_hi = std::max(what_hi, what);
        }
        s.dH_ball_S2 = wmax;  // distance to the boundary-model sphere S_2(0)
        s.what_min = what_lo;
        s.what_max = what_hi;
    } else {
        s.sup_A_trfree_ball = nan;
        s.dH_ball_bestfit = nan;
        s.dH_ball_S2 = nan;
        s.what_min = nan;
        s.what_max = nan;
    }
    return s;
}

}  // namespace

FlowState flow_init(RadialGraph initial) {
    if (initial.ambient == Ambient::SphereCap)
        throw invalid_input("flow: supported ambients are hyperbolic and Euclidean");
    FlowState st;
    st.graph = std::move(initial);
    polar_filter(*st.graph.grid, st.graph.u);
    st.bundle = curvature_from_graph(st.graph);
    check_mean_convex(st.bundle);
    return st;
}

FlowState flow_step(FlowState state, const FlowControls& controls) {
    if (!(controls.cfl > 0.0) || !(controls.cfl < 1.0))
        throw invalid_input("flow: cfl must lie in (0, 1)");
    const double dt = stable_dt(state, controls);

    const std::size_t n = state.graph.u.size();
    const std::vector<double> u0 = state.graph.u;
    RadialGraph work = state.graph;

    // Classical RK4 on du/dt = v/H_sum, bundle refreshed per stage.
    const std::vector<double> k1 = speed(state.bundle);
    for (std::size_t k = 0; k < n; ++k) work.u[k] = u0[k] + 0.5 * dt * k1[k];
    CurvatureBundle b = curvature_from_graph(work);
    check_mean_convex(b);
    const std::vector<double> k2 = speed(b);
    for (std::size_t k = 0; k < n; ++k) work.u[k] = u0[k] + 0.5 * dt * k2[k];
    b = curvature_from_graph(work);
    check_mean_convex(b);
    const std::vector<double> k3 = speed(b);
    for (std::size_t k = 0; k < n; ++k) work.u[k] = u0[k] + dt * k3[k];
    b = curvature_from_graph(work);
    check_mean_convex(b);
    const std::vector<double> k4 = speed(b);

    for (std::size_t k = 0; k < n; ++k)
        work.u[k] = u0[k] + dt / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    polar_filter(*work.grid, work.u);
    validate_graph(work);

    state.graph = std::move(work);
    state.t += dt;
    state.dt_last = dt;
    state.bundle = curvature_from_graph(state.graph);
    check_mean_convex(state.bundle);
    return state;
}

double sphere_flow_oracle(double r0, int n, Ambient ambient, double t) {
    if (!radius_admissible(ambient, r0)) throw invalid_input("sphere_flow_oracle: bad r0");
    if (n < 2) throw invalid_input("sphere_flow_oracle: n must be >= 2");
    switch (ambient) {
        case Ambient::Euclidean: return r0 * std::exp(t / n);
        case Ambient::Hyperbolic: return std::asinh(std::sinh(r0) * std::exp(t / n));
        default: throw invalid_input("sphere_flow_oracle: unsupported ambient");
    }
}

FlowDiagnostics run_flow(const RadialGraph& initial, const FlowControls& controls) {
    if (!(controls.t_end > 0.0)) throw invalid_input("run_flow: t_end must be positive");
    if (!(controls.sample_every > 0.0))
        throw invalid_input("run_flow: sample_every must be positive");

    FlowState st = flow_init(initial);
    FlowDiagnostics diag;
    diag.samples.push_back(sample_state(st));
    double next_sample = controls.sample_every;
    while (st.t < controls.t_end - 1e-12) {
        FlowControls step_ctl = controls;
        step_ctl.dt_max = std::min(controls.dt_max, controls.t_end - st.t);
        st = flow_step(std::move(st), step_ctl);
        if (st.t >= next_sample - 1e-12 || st.t >= controls.t_end - 1e-12) {
            diag.samples.push_back(sample_state(st));
            while (next_sample <= st.t + 1e-12) next_sample += controls.sample_every;
        }
    }
    return diag;
}

RescaledState rescale_state(const FlowState& state) {
    RescaledState r;
    const std::size_t n = state.graph.u.size();
    r.u_hat.resize(n);
    for (std::size_t k = 0; k < n; ++k) r.u_hat[k] = state.graph.u[k] - state.t / kDim;
    if (state.graph.ambient == Ambient::Hyperbolic) {
        r.w_hat.resize(n);
        const double growth = std::exp(state.t / kDim);
        for (std::size_t k = 0; k < n; ++k)
            r.w_hat[k] = (2.0 - r_to_rho(state.graph.u[k])) * growth;
    }
    return r;
}

std::map<std::string, LineFit> fit_decay_exponents(const FlowDiagnostics& diag, double t_lo,
                                                   double t_hi) {
    std::vector<double> t;
    std::vector<std::pair<std::string, std::vector<double>>> series = {
        {"sup_A_trfree_hyp", {}}, {"sup_A_trfree_ball", {}}, {"dH_ball_bestfit", {}},
        {"dH_ball_S2", {}},       {"osc_uhat", {}},
    };
    for (const FlowSample& s : diag.samples) {
        if (s.t < t_lo - 1e-12 || s.t > t_hi + 1e-12) continue;
        t.push_back(s.t);
        series[0].second.push_back(s.sup_A_trfree_hyp);
        series[1].second.push_back(s.sup_A_trfree_ball);
        series[2].second.push_back(s.dH_ball_bestfit);
        series[3].second.push_back(s.dH_ball_S2);
        series[4].second.push_back(s.osc_uhat);
    }
    if (t.size() < 10)
        throw invalid_input("fit_decay_exponents: need at least 10 samples in the window");
    std::map<std::string, LineFit> fits;
    for (auto& [name, values] : series) {
        bool positive = true;
        for (double v : values)
            if (!(v > 0.0) || !std::isfinite(v)) positive = false;
        if (!positive) continue;  // skip series that are zero or undefined here
        fits[name] = fit_log_slope(t, values, 10);
    }
    if (fits.empty())
        throw invalid_input("fit_decay_exponents: no tracked quantity stays positive");
    return fits;
}

const char* const kFlowCsvHeader =
    "t,sup_A_trfree_hyp,sup_A_trfree_ball,dH_ball_bestfit,dH_ball_S2,osc_uhat,what_min,"
    "what_max,H_min,H_max,v_max,dt";

}  // namespace umb
