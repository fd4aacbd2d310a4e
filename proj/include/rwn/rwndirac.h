/*
 * C API of the rwndirac library: discrete Dirac spectra for a point electron
 * with anomalous magnetic moment in the Reissner-Weyl-Nordstrom spacetime of
 * a naked point nucleus, computed by Prufer-transform shooting on a compact
 * cylinder. Opaque handles own all state; every fallible call returns a
 * status code and leaves a message in rwn_last_error() (thread local).
 */
#ifndef RWN_RWNDIRAC_H
#define RWN_RWNDIRAC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rwn_status {
    RWN_OK = 0,
    RWN_ERR_INVALID_ARGUMENT,
    RWN_ERR_NOT_NAKED,
    RWN_ERR_DOMAIN,
    RWN_ERR_BRACKET_NOT_FOUND,
    RWN_ERR_UNDECIDED,
    RWN_ERR_STEP_LIMIT,
    RWN_ERR_STEP_UNDERFLOW,
    RWN_ERR_NON_CONNECTOR,
    RWN_ERR_IO,
    RWN_ERR_INTERNAL
} rwn_status;

const char* rwn_version(void);
const char* rwn_status_name(rwn_status s);
/* Message from the most recent failing call on this thread. */
const char* rwn_last_error(void);

/* ------------------------------------------------------------------ */
/* Parameters                                                          */

typedef struct rwn_physical_input {
    double Z;          /* nuclear charge, units of e; real > 0 */
    double A;          /* nuclear mass number >= 0 */
    double amm;        /* anomalous moment coefficient a, Bohr magnetons */
    double g_ratio;    /* gravitational/electric coupling ratio */
    double mass_ratio; /* proton/electron mass ratio */
    double alpha;      /* fine structure constant */
    int k;             /* spin-orbit quantum number, nonzero */
    int has_lambda_override;
    double lambda_override;
} rwn_physical_input;

/* Z = 1, A = 0, a = alpha/2pi, physical g_ratio, k = -1. */
void rwn_physical_input_defaults(rwn_physical_input* in);

typedef struct rwn_params rwn_params;

rwn_status rwn_params_derive(const rwn_physical_input* in, rwn_params** out);
void rwn_params_free(rwn_params* p);

double rwn_params_z_star(const rwn_params* p);
double rwn_params_a_star(const rwn_params* p);
double rwn_params_gamma(const rwn_params* p);
double rwn_params_lambda(const rwn_params* p);
double rwn_params_g_ratio(const rwn_params* p);
double rwn_params_alpha(const rwn_params* p);
int rwn_params_k(const rwn_params* p);
int rwn_params_self_adjoint(const rwn_params* p);
rwn_status rwn_params_sa_margin(const rwn_params* p, double* out);

rwn_status rwn_metric_f(const rwn_params* p, double r, double* out);
rwn_status rwn_metric_g(const rwn_params* p, double eta, double* out);
rwn_status rwn_eta_of_r(double r, double* out);
rwn_status rwn_r_of_eta(double eta, double* out);

/* ------------------------------------------------------------------ */
/* Shooting                                                            */

typedef struct rwn_solve_options {
    double r0;
    double eta_max;
    double eps_tol;
    double edge_guard;
    double band_tol;
    double seed_margin;
    double scan_resolution;
    int max_bisections;
    double ode_abs_tol;
    double ode_rel_tol;
    long ode_max_steps;
} rwn_solve_options;

void rwn_solve_options_defaults(rwn_solve_options* o);

typedef struct rwn_orbit rwn_orbit;

rwn_status rwn_orbit_run(const rwn_params* p, double eps, const rwn_solve_options* o,
                         rwn_orbit** out);
void rwn_orbit_free(rwn_orbit* orb);
long rwn_orbit_winding(const rwn_orbit* orb);
double rwn_orbit_terminal_omega(const rwn_orbit* orb);
double rwn_orbit_terminal_eta(const rwn_orbit* orb);
/* "node-above" | "node-below" | "undecided" */
const char* rwn_orbit_classification(const rwn_orbit* orb);
size_t rwn_orbit_sample_count(const rwn_orbit* orb);
rwn_status rwn_orbit_sample(const rwn_orbit* orb, size_t i, double* tau, double* eta,
                            double* omega_lift);
rwn_status rwn_orbit_write_csv(const rwn_orbit* orb, const char* path);

typedef struct rwn_eigen_result {
    double Z;
    int k;
    int N;
    int n;
    double epsilon;
    double bracket_width;
    long iterations;
    int has_oracle;
    double oracle_epsilon;
    int ok;           /* 1 iff status is "ok" */
    char status[16];  /* ok | absent | error */
    char detail[160]; /* fine-grained status or message */
} rwn_eigen_result;

/* Pass has_seed = 0 for the built-in seeding (oracle when close, else grid). */
rwn_status rwn_eigen_find(const rwn_params* p, int k, int N, const rwn_solve_options* o,
                          int has_seed, double seed, rwn_eigen_result* out);

/* ------------------------------------------------------------------ */
/* Sweeps                                                              */

typedef struct rwn_sweep_spec {
    const double* z_values;
    size_t n_z;
    const int* k_values;
    size_t n_k;
    int n_max;
    rwn_physical_input base; /* Z field is overridden per cell */
    rwn_solve_options solve;
    int jobs;
    const char* partial_path; /* optional: finished rows appended here (CSV) */
    const char* resume_path;  /* optional: CSV of rows to reuse */
} rwn_sweep_spec;

typedef struct rwn_table rwn_table;

rwn_status rwn_sweep_run(const rwn_sweep_spec* spec, rwn_table** out);
void rwn_table_free(rwn_table* t);
size_t rwn_table_size(const rwn_table* t);
rwn_status rwn_table_row(const rwn_table* t, size_t i, rwn_eigen_result* out);
rwn_status rwn_table_write(const rwn_table* t, const char* path, int as_json);
rwn_status rwn_table_read(const char* path, int as_json, rwn_table** out);

/* ------------------------------------------------------------------ */
/* Barriers                                                            */

typedef struct rwn_barrier_report {
    char name[32];
    long grid;
    double min_margin;
    int passed;
    int hypotheses_ok;
} rwn_barrier_report;

/* Runs the five checks (k-dependent ones at k_pos >= 1); writes up to cap
 * reports and the total count. */
rwn_status rwn_barrier_check_all(const rwn_params* p, int k_pos, long grid,
                                 rwn_barrier_report* reports, size_t cap, size_t* n_out);
rwn_status rwn_barrier_nodes(const rwn_params* p, int k, double delta, double* a_k,
                             double* b_k);

/* ------------------------------------------------------------------ */
/* Oracles                                                             */

rwn_status rwn_oracle_sommerfeld(int n, int k, double z, double alpha, double* eps,
                                 int* in_range);
rwn_status rwn_oracle_bohr(int n, double z, double alpha, double grav_term, double* out);
size_t rwn_oracle_landmark_count(void);
rwn_status rwn_oracle_landmark(size_t i, char* curve, size_t curve_len, double* z,
                               double* eps, double* z_tol);

/* ------------------------------------------------------------------ */
/* Radial solutions                                                    */

typedef struct rwn_radial_options {
    double r0;
    double r_max;
    double r_ref;
    int samples_per_decade;
    int require_connector;
} rwn_radial_options;

void rwn_radial_options_defaults(rwn_radial_options* o);

typedef struct rwn_radial rwn_radial;

rwn_status rwn_radial_reconstruct(const rwn_params* p, double eps,
                                  const rwn_radial_options* o, rwn_radial** out);
void rwn_radial_free(rwn_radial* sol);
size_t rwn_radial_size(const rwn_radial* sol);
rwn_status rwn_radial_sample(const rwn_radial* sol, size_t i, double* r, double* u,
                             double* v, double* R, double* omega);
double rwn_radial_norm(const rwn_radial* sol);
rwn_status rwn_radial_write_csv(const rwn_radial* sol, const char* path);
rwn_status rwn_radial_fit_small_r(const rwn_radial* sol, double* out);
rwn_status rwn_radial_fit_far_field(const rwn_radial* sol, double r_lo, double r_hi,
                                    double* out);
/* is_power_law = 1: value is lambda/Z*; 0: flat-space essential-singularity
 * rate lambda. */
rwn_status rwn_small_r_exponent(const rwn_params* p, double* value, int* is_power_law);

#ifdef __cplusplus
}
#endif

#endif
