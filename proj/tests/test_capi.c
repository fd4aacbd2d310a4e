/* Exercises the shared-library C surface end to end. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "rwn/rwndirac.h"

static int failures = 0;

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            fprintf(stderr, "[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                    \
        }                                                                  \
    } while (0)

#define CHECK_OK(call) CHECK((call) == RWN_OK)

int main(void) {
    CHECK(strlen(rwn_version()) > 0);
    CHECK(strcmp(rwn_status_name(RWN_OK), "ok") == 0);

    rwn_physical_input in;
    rwn_physical_input_defaults(&in);
    CHECK(in.Z == 1.0);
    CHECK(in.k == -1);

    /* error path: invalid Z */
    rwn_params* bad = NULL;
    in.Z = 0.0;
    CHECK(rwn_params_derive(&in, &bad) == RWN_ERR_INVALID_ARGUMENT);
    CHECK(strlen(rwn_last_error()) > 0);

    in.Z = 1.0;
    rwn_params* p = NULL;
    CHECK_OK(rwn_params_derive(&in, &p));
    CHECK(fabs(rwn_params_z_star(p) / 3.575e-24 - 1.0) < 1e-2);
    CHECK(rwn_params_gamma(p) < 0.0);
    CHECK(rwn_params_lambda(p) > 0.0);
    CHECK(rwn_params_k(p) == -1);
    CHECK(rwn_params_self_adjoint(p) == 1);
    double margin = 0.0;
    CHECK_OK(rwn_params_sa_margin(p, &margin));
    CHECK(fabs(margin / 1.27e-18 - 1.0) < 2e-2);

    double v = 0.0;
    CHECK_OK(rwn_metric_f(p, 1.0, &v));
    CHECK(fabs(v - 1.0) < 1e-12);
    CHECK_OK(rwn_metric_g(p, 0.0, &v));
    CHECK(v == rwn_params_z_star(p));
    CHECK_OK(rwn_eta_of_r(1.0, &v));
    CHECK(v == 0.5);
    CHECK_OK(rwn_r_of_eta(0.5, &v));
    CHECK(v == 1.0);
    CHECK(rwn_r_of_eta(1.5, &v) == RWN_ERR_DOMAIN);

    rwn_solve_options solve;
    rwn_solve_options_defaults(&solve);
    CHECK(solve.r0 == 1e-6);
    CHECK(solve.eta_max == 1.0 - 1e-9);

    /* orbit */
    rwn_orbit* orb = NULL;
    CHECK_OK(rwn_orbit_run(p, 0.5, &solve, &orb));
    CHECK(rwn_orbit_winding(orb) == 0);
    CHECK(strcmp(rwn_orbit_classification(orb), "undecided") != 0);
    CHECK(rwn_orbit_sample_count(orb) > 10);
    double tau, eta, om;
    CHECK_OK(rwn_orbit_sample(orb, 0, &tau, &eta, &om));
    CHECK(om == 0.0);
    CHECK_OK(rwn_orbit_write_csv(orb, "capi_orbit.csv"));
    rwn_orbit_free(orb);

    /* oracle */
    double eps_oracle = 0.0;
    int in_range = 0;
    CHECK_OK(rwn_oracle_sommerfeld(1, -1, 1.0, 1.0 / 137.036, &eps_oracle, &in_range));
    CHECK(in_range == 1);
    CHECK(fabs(eps_oracle - 0.999973374) < 1e-9);
    CHECK(rwn_oracle_sommerfeld(1, 1, 1.0, 1.0 / 137.036, &eps_oracle, &in_range) ==
          RWN_ERR_INVALID_ARGUMENT);
    double b = 0.0;
    CHECK_OK(rwn_oracle_bohr(1, 1.0, 1.0 / 137.036, 0.0, &b));
    CHECK(fabs(b + 2.6627e-5) < 1e-8);
    CHECK(rwn_oracle_landmark_count() == 3);
    char curve[32];
    double lz, leps, ltol;
    CHECK_OK(rwn_oracle_landmark(0, curve, sizeof curve, &lz, &leps, &ltol));
    CHECK(strcmp(curve, "1S-crossing") == 0);
    CHECK(lz == 145.0);

    /* eigenvalue */
    rwn_eigen_result res;
    CHECK_OK(rwn_eigen_find(p, -1, 0, &solve, 0, 0.0, &res));
    CHECK(res.ok == 1);
    CHECK(strcmp(res.status, "ok") == 0);
    CHECK(res.has_oracle == 1);
    CHECK(fabs(res.epsilon - res.oracle_epsilon) < 1e-6);
    CHECK(res.n == 1);

    /* radial reconstruction */
    rwn_radial_options ro;
    rwn_radial_options_defaults(&ro);
    ro.r_max = 500.0;
    rwn_radial* sol = NULL;
    CHECK_OK(rwn_radial_reconstruct(p, res.epsilon, &ro, &sol));
    CHECK(rwn_radial_size(sol) > 1000);
    CHECK(rwn_radial_norm(sol) > 0.0);
    double r, u, w, R, omg;
    CHECK_OK(rwn_radial_sample(sol, 0, &r, &u, &w, &R, &omg));
    CHECK(w == 0.0);
    CHECK_OK(rwn_radial_write_csv(sol, "capi_radial.csv"));
    double rate = 0.0;
    CHECK_OK(rwn_radial_fit_far_field(sol, 250.0, 480.0, &rate));
    CHECK(fabs(rate + sqrt(1.0 - res.epsilon * res.epsilon)) < 1e-3);
    CHECK(rwn_radial_fit_small_r(sol, &rate) == RWN_ERR_DOMAIN); /* physical G */
    rwn_radial_free(sol);

    double expo = 0.0;
    int is_power = 0;
    CHECK_OK(rwn_small_r_exponent(p, &expo, &is_power));
    CHECK(is_power == 1);
    CHECK(fabs(expo / 1.17e18 - 1.0) < 2e-2);

    /* barriers */
    rwn_barrier_report reports[8];
    size_t n_reports = 0;
    CHECK_OK(rwn_barrier_check_all(p, 1, 5000, reports, 8, &n_reports));
    CHECK(n_reports == 5);
    for (size_t i = 0; i < n_reports; ++i)
        CHECK(reports[i].passed == 1);
    double a_k = 0.0, b_k = 0.0;
    CHECK_OK(rwn_barrier_nodes(p, 1, 1.01, &a_k, &b_k));
    CHECK(a_k > 0.0);
    CHECK(b_k > a_k);
    CHECK(b_k < 1.0);

    /* sweep + table io */
    const double zs[] = {1.0};
    const int ks[] = {-1};
    rwn_sweep_spec spec;
    memset(&spec, 0, sizeof spec);
    spec.z_values = zs;
    spec.n_z = 1;
    spec.k_values = ks;
    spec.n_k = 1;
    spec.n_max = 1;
    rwn_physical_input_defaults(&spec.base);
    spec.solve = solve;
    spec.jobs = 1;
    rwn_table* table = NULL;
    CHECK_OK(rwn_sweep_run(&spec, &table));
    CHECK(rwn_table_size(table) == 1);
    rwn_eigen_result row;
    CHECK_OK(rwn_table_row(table, 0, &row));
    CHECK(row.ok == 1);
    CHECK_OK(rwn_table_write(table, "capi_table.csv", 0));
    CHECK_OK(rwn_table_write(table, "capi_table.json", 1));
    rwn_table* back = NULL;
    CHECK_OK(rwn_table_read("capi_table.json", 1, &back));
    rwn_eigen_result row2;
    CHECK_OK(rwn_table_row(back, 0, &row2));
    CHECK(row2.epsilon == row.epsilon); /* bit-identical through JSON */
    rwn_table_free(back);
    rwn_table_free(table);

    remove("capi_orbit.csv");
    remove("capi_radial.csv");
    remove("capi_table.csv");
    remove("capi_table.json");

    if (failures) {
        fprintf(stderr, "%d C API check(s) failed\n", failures);
        return 1;
    }
    printf("C API checks passed\n");
    return 0;
}
