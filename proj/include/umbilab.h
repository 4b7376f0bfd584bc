/* umbilab — almost-umbilical hypersurface laboratory, C interface.
 *
 * A C++ core computes curvature bundles, pinching norms, conformal ball-model
 * transforms and inverse mean curvature flow for star-shaped radial graphs
 * over S^2.  This header is the stable boundary: opaque handles, integer
 * status codes, UTF-8 strings.  Every function that can fail returns a
 * umb_status; the message for the most recent failure on the calling thread
 * is available through umb_last_error().
 *
 * Strings returned through char** are heap-allocated; release them with
 * umb_string_free().
 */

#ifndef UMBILAB_H
#define UMBILAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum umb_status {
    UMB_OK = 0,
    UMB_ERR_INVALID = 1,   /* bad argument or violated precondition */
    UMB_ERR_NUMERIC = 2,   /* breakdown: lost positivity, no convergence */
    UMB_ERR_IO = 3,        /* file or parse failure */
    UMB_ERR_INTERNAL = 4
} umb_status;

typedef struct umb_grid umb_grid;
typedef struct umb_graph umb_graph;
typedef struct umb_bundle umb_bundle;

const char* umb_version(void);
const char* umb_last_error(void);
void umb_string_free(char* s);

/* ------------------------------------------------------------------- grids */
/* Quadrature-equipped lat-long grid; n_theta >= 8, even n_phi >= 16. */
umb_status umb_grid_create(int n_theta, int n_phi, umb_grid** out);
void umb_grid_destroy(umb_grid* g);
int umb_grid_n_theta(const umb_grid* g);
int umb_grid_n_phi(const umb_grid* g);
umb_status umb_grid_weight_sum(const umb_grid* g, double* out);

/* ------------------------------------------------------------------ graphs */
/* ambient is "euclidean", "hyperbolic" or "sphere_cap". */
umb_status umb_graph_sphere(const umb_grid* g, const char* ambient, double radius,
                            umb_graph** out);
/* profile: "y2", "y3", "y2_zonal", "y3_zonal", "bump", "bandlimited". */
umb_status umb_graph_perturbed(const umb_grid* g, const char* ambient, double radius,
                               double eps, const char* profile, unsigned long long seed,
                               umb_graph** out);
/* u = 2 + 0.3 (degree-2 mode) + 0.15 (degree-3 mode), seeded phases. */
umb_status umb_graph_generic(const umb_grid* g, const char* ambient, unsigned long long seed,
                             umb_graph** out);
umb_status umb_graph_load(const char* path, umb_graph** out);
umb_status umb_graph_save(const umb_graph* gr, const char* path);
void umb_graph_destroy(umb_graph* gr);
int umb_graph_n_theta(const umb_graph* gr);
int umb_graph_n_phi(const umb_graph* gr);
/* Borrowed pointer to the row-major radial values, n_theta * n_phi doubles. */
const double* umb_graph_u(const umb_graph* gr);

/* Ball-model conversions (Poincare ball of radius 2).  `to` is "ball" or
 * "hyperbolic". */
umb_status umb_graph_convert(const umb_graph* gr, const char* to, umb_graph** out);

/* -------------------------------------------------------------- curvature */
umb_status umb_bundle_create(const umb_graph* gr, umb_bundle** out);
void umb_bundle_destroy(umb_bundle* b);
/* name: "H_min", "H_max", "H_avg_min", "H_avg_max", "v_max", "area",
 * "sup_A_traceless". */
umb_status umb_bundle_scalar(const umb_bundle* b, const char* name, double* out);
/* tensor: "A_traceless", "h", "g"; p >= 1, or p <= 0 for the sup norm. */
umb_status umb_bundle_lp_norm(const umb_bundle* b, const char* tensor, double p, double* out);
umb_status umb_bundle_lambda1(const umb_bundle* b, double* out);

/* Exact radius of the flowed geodesic sphere at time t (solver oracle). */
umb_status umb_sphere_flow_radius(double r0, int n, const char* ambient, double t,
                                  double* out);

/* ---------------------------------------------------------- orchestration */
/* Each runner takes a JSON configuration string and yields a JSON report
 * (also written to the paths named inside the configuration).  Schemas:
 *
 * analyze:    {"input": path | preset, "grid": "64x128", "ambient": "...",
 *              "p": [2,4], "lambda1": true, "report": path?}
 * flow:       {"initial": path | preset, "grid": ..., "ambient": ...,
 *              "t_end": 10, "cfl": 0.2, "sample_every": 0.1, "dt_max": 0.05,
 *              "csv": path?, "fit_window": [5,10]?, "report": path?}
 * sweep:      {"profile": "y2", "seed": 0, "eps": [..] |
 *              {"min":1e-3,"max":1e-1,"count":12}, "p": 4, "grid": ...,
 *              "R": 1.0, "lambda1": true, "out_dir": path?}
 * optimality: {"grid": ..., "seed": 0, "t_end": 10, "cfl": 0.2,
 *              "sample_every": 0.1, "dt_max": 0.05, "fit_window": [5,10],
 *              "slope_tol": 0.1, "band_c": 2.0, "alpha_probe": 1.5,
 *              "out_dir": path?}
 * convert:    {"input": path, "to": "ball" | "hyperbolic", "out": path?,
 *              "ref_radius": r?, "report": path?}
 *
 * A preset is {"kind": "sphere" | "perturbed" | "generic", "R": ...,
 * "eps": ..., "profile": ..., "seed": ...}.
 */
umb_status umb_run_analyze(const char* config_json, char** report_json);
umb_status umb_run_flow(const char* config_json, char** report_json);
umb_status umb_run_sweep(const char* config_json, char** report_json);
umb_status umb_run_optimality(const char* config_json, char** report_json);
umb_status umb_run_convert(const char* config_json, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* UMBILAB_H */
