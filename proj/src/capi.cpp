#include "rwn/rwndirac.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "rwn/barriers.hpp"
#include "rwn/error.hpp"
#include "rwn/io.hpp"
#include "rwn/metric.hpp"
#include "rwn/oracle.hpp"
#include "rwn/params.hpp"
#include "rwn/shooting.hpp"
#include "rwn/wavefunction.hpp"

struct rwn_params {
    rwn::ModelParams p;
};

struct rwn_orbit {
    rwn::shooting::OrbitOutcome outcome;
    rwn::ode::Trajectory<2> trajectory;
};

struct rwn_table {
    rwn::shooting::SpectralTable t;
};

struct rwn_radial {
    rwn::wavefunction::RadialSolution sol;
};

namespace {

thread_local std::string g_last_error;

rwn_status status_of(const rwn::Error& e) {
    using rwn::ErrorCode;
    switch (e.code()) {
        case ErrorCode::invalid_argument: return RWN_ERR_INVALID_ARGUMENT;
        case ErrorCode::not_naked: return RWN_ERR_NOT_NAKED;
        case ErrorCode::domain: return RWN_ERR_DOMAIN;
        case ErrorCode::bracket_not_found: return RWN_ERR_BRACKET_NOT_FOUND;
        case ErrorCode::undecided_orbit: return RWN_ERR_UNDECIDED;
        case ErrorCode::step_limit: return RWN_ERR_STEP_LIMIT;
        case ErrorCode::step_underflow: return RWN_ERR_STEP_UNDERFLOW;
        case ErrorCode::non_connector: return RWN_ERR_NON_CONNECTOR;
        case ErrorCode::io: return RWN_ERR_IO;
        case ErrorCode::internal: return RWN_ERR_INTERNAL;
    }
    return RWN_ERR_INTERNAL;
}

template <class F>
rwn_status guard(F&& fn) {
    try {
        fn();
        return RWN_OK;
    } catch (const rwn::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RWN_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return RWN_ERR_INTERNAL;
    }
}

rwn_status fail(rwn_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

void copy_str(char* dst, size_t cap, const std::string& src) {
    std::snprintf(dst, cap, "%s", src.c_str());
}

rwn::PhysicalInput to_cpp(const rwn_physical_input& in) {
    rwn::PhysicalInput out;
    out.z = in.Z;
    out.a_mass = in.A;
    out.amm = in.amm;
    out.g_ratio = in.g_ratio;
    out.mass_ratio = in.mass_ratio;
    out.alpha = in.alpha;
    out.k = in.k;
    if (in.has_lambda_override)
        out.lambda_override = in.lambda_override;
    return out;
}

rwn::shooting::SolveOptions to_cpp(const rwn_solve_options& o) {
    rwn::shooting::SolveOptions s;
    s.r0 = o.r0;
    s.eta_max = o.eta_max;
    s.eps_tol = o.eps_tol;
    s.edge_guard = o.edge_guard;
    s.band_tol = o.band_tol;
    s.seed_margin = o.seed_margin;
    s.scan_resolution = o.scan_resolution;
    s.max_bisections = o.max_bisections;
    s.ode_cfg.abs_tol = o.ode_abs_tol;
    s.ode_cfg.rel_tol = o.ode_rel_tol;
    s.ode_cfg.max_steps = o.ode_max_steps;
    return s;
}

void fill_result(const rwn::shooting::EigenvalueRecord& rec, rwn_eigen_result* out) {
    using rwn::shooting::RecordStatus;
    std::memset(out, 0, sizeof *out);
    out->Z = rec.z;
    out->k = rec.k;
    out->N = rec.N;
    out->n = rec.n;
    out->epsilon = rec.eps;
    out->bracket_width = rec.bracket_width;
    out->iterations = rec.iterations;
    out->has_oracle = rec.oracle_eps.has_value();
    out->oracle_epsilon = rec.oracle_eps.value_or(0.0);
    out->ok = rec.status == RecordStatus::ok;
    copy_str(out->status, sizeof out->status, rwn::shooting::record_status_csv(rec.status));
    copy_str(out->detail, sizeof out->detail,
             rec.detail.empty() ? rwn::shooting::record_status_name(rec.status) : rec.detail);
}

} // namespace

extern "C" {

const char* rwn_version(void) { return "rwndirac 1.0.0"; }

const char* rwn_last_error(void) { return g_last_error.c_str(); }

const char* rwn_status_name(rwn_status s) {
    switch (s) {
        case RWN_OK: return "ok";
        case RWN_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case RWN_ERR_NOT_NAKED: return "not-naked";
        case RWN_ERR_DOMAIN: return "domain";
        case RWN_ERR_BRACKET_NOT_FOUND: return "bracket-not-found";
        case RWN_ERR_UNDECIDED: return "undecided";
        case RWN_ERR_STEP_LIMIT: return "step-limit";
        case RWN_ERR_STEP_UNDERFLOW: return "step-underflow";
        case RWN_ERR_NON_CONNECTOR: return "non-connector";
        case RWN_ERR_IO: return "io";
        case RWN_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void rwn_physical_input_defaults(rwn_physical_input* in) {
    in->Z = 1.0;
    in->A = 0.0;
    in->amm = rwn::constants::amm_coefficient_qed;
    in->g_ratio = rwn::constants::g_ratio_physical;
    in->mass_ratio = rwn::constants::mass_ratio_default;
    in->alpha = rwn::constants::alpha_fs;
    in->k = -1;
    in->has_lambda_override = 0;
    in->lambda_override = 0.0;
}

rwn_status rwn_params_derive(const rwn_physical_input* in, rwn_params** out) {
    if (!in || !out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = new rwn_params{rwn::derive_params(to_cpp(*in))}; });
}

void rwn_params_free(rwn_params* p) { delete p; }

double rwn_params_z_star(const rwn_params* p) { return p->p.z_star; }
double rwn_params_a_star(const rwn_params* p) { return p->p.a_star; }
double rwn_params_gamma(const rwn_params* p) { return p->p.gamma; }
double rwn_params_lambda(const rwn_params* p) { return p->p.lambda; }
double rwn_params_g_ratio(const rwn_params* p) { return p->p.g_ratio; }
double rwn_params_alpha(const rwn_params* p) { return p->p.alpha; }
int rwn_params_k(const rwn_params* p) { return p->p.k; }
int rwn_params_self_adjoint(const rwn_params* p) { return p->p.self_adjoint; }

rwn_status rwn_params_sa_margin(const rwn_params* p, double* out) {
    if (!p || !out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = rwn::self_adjointness_margin(p->p); });
}

rwn_status rwn_metric_f(const rwn_params* p, double r, double* out) {
    if (!p || !out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = rwn::metric::f(r, p->p); });
}

rwn_status rwn_metric_g(const rwn_params* p, double eta, double* out) {
    if (!p || !out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = rwn::metric::g(eta, p->p); });
}

rwn_status rwn_eta_of_r(double r, double* out) {
    if (!out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = rwn::metric::eta_of_r(r); });
}

rwn_status rwn_r_of_eta(double eta, double* out) {
    if (!out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = rwn::metric::r_of_eta(eta); });
}

void rwn_solve_options_defaults(rwn_solve_options* o) {
    const rwn::shooting::SolveOptions s;
    o->r0 = s.r0;
    o->eta_max = s.eta_max;
    o->eps_tol = s.eps_tol;
    o->edge_guard = s.edge_guard;
    o->band_tol = s.band_tol;
    o->seed_margin = s.seed_margin;
    o->scan_resolution = s.scan_resolution;
    o->max_bisections = s.max_bisections;
    o->ode_abs_tol = s.ode_cfg.abs_tol;
    o->ode_rel_tol = s.ode_cfg.rel_tol;
    o->ode_max_steps = s.ode_cfg.max_steps;
}

rwn_status rwn_orbit_run(const rwn_params* p, double eps, const rwn_solve_options* o,
                         rwn_orbit** out) {
    if (!p || !o || !out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        auto orb = std::make_unique<rwn_orbit>();
        orb->outcome = rwn::shooting::launch_orbit(eps, p->p, to_cpp(*o), &orb->trajectory);
        *out = orb.release();
    });
}

void rwn_orbit_free(rwn_orbit* orb) { delete orb; }

long rwn_orbit_winding(const rwn_orbit* orb) { return orb->outcome.winding; }
double rwn_orbit_terminal_omega(const rwn_orbit* orb) {
    return orb->outcome.terminal_omega_lift;
}
double rwn_orbit_terminal_eta(const rwn_orbit* orb) { return orb->outcome.terminal_eta; }

const char* rwn_orbit_classification(const rwn_orbit* orb) {
    using rwn::shooting::NodeClass;
    switch (orb->outcome.classification) {
        case NodeClass::node_above: return "node-above";
        case NodeClass::node_below: return "node-below";
        default: return "undecided";
    }
}

size_t rwn_orbit_sample_count(const rwn_orbit* orb) { return orb->trajectory.t.size(); }

rwn_status rwn_orbit_sample(const rwn_orbit* orb, size_t i, double* tau, double* eta,
                            double* omega_lift) {
    if (!orb || i >= orb->trajectory.t.size())
        return fail(RWN_ERR_INVALID_ARGUMENT, "sample index out of range");
    if (tau)
        *tau = orb->trajectory.t[i];
    if (eta)
        *eta = orb->trajectory.y[i][0];
    if (omega_lift)
        *omega_lift = orb->trajectory.y[i][1];
    return RWN_OK;
}

rwn_status rwn_orbit_write_csv(const rwn_orbit* orb, const char* path) {
    if (!orb || !path)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        std::ofstream os(path, std::ios::binary);
        if (!os)
            throw rwn::Error(rwn::ErrorCode::io, std::string("cannot open: ") + path);
        rwn::io::write_trajectory_csv(orb->trajectory, os);
    });
}

rwn_status rwn_eigen_find(const rwn_params* p, int k, int N, const rwn_solve_options* o,
                          int has_seed, double seed, rwn_eigen_result* out) {
    if (!p || !o || !out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        std::optional<double> s;
        if (has_seed)
            s = seed;
        fill_result(rwn::shooting::find_eigenvalue(k, N, p->p, s, to_cpp(*o)), out);
    });
}

rwn_status rwn_sweep_run(const rwn_sweep_spec* spec, rwn_table** out) {
    if (!spec || !out || (!spec->z_values && spec->n_z) || (!spec->k_values && spec->n_k))
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        std::vector<double> zs(spec->z_values, spec->z_values + spec->n_z);
        std::vector<int> ks(spec->k_values, spec->k_values + spec->n_k);

        rwn::shooting::SweepOptions opts;
        opts.solve = to_cpp(spec->solve);
        opts.jobs = spec->jobs;

        rwn::shooting::SpectralTable resume;
        if (spec->resume_path) {
            std::ifstream is(spec->resume_path, std::ios::binary);
            if (is) {
                resume = rwn::io::read_table_csv(is);
                opts.resume_from = &resume;
            }
        }

        std::ofstream partial;
        if (spec->partial_path) {
            const bool fresh = !std::ifstream(spec->partial_path).good();
            partial.open(spec->partial_path, std::ios::binary | std::ios::app);
            if (!partial)
                throw rwn::Error(rwn::ErrorCode::io,
                                 std::string("cannot open: ") + spec->partial_path);
            if (fresh) {
                rwn::shooting::SpectralTable empty;
                rwn::io::write_table_csv(empty, partial);
            }
            opts.on_record = [&partial](const rwn::shooting::EigenvalueRecord& rec) {
                rwn::shooting::SpectralTable one;
                one.rows.push_back(rec);
                std::ostringstream os;
                rwn::io::write_table_csv(one, os);
                const std::string s = os.str();
                partial << s.substr(s.find('\n') + 1);
                partial.flush();
            };
        }

        auto table = std::make_unique<rwn_table>();
        table->t = rwn::shooting::spectrum_sweep(zs, ks, spec->n_max, to_cpp(spec->base), opts);
        *out = table.release();
    });
}

void rwn_table_free(rwn_table* t) { delete t; }

size_t rwn_table_size(const rwn_table* t) { return t->t.rows.size(); }

rwn_status rwn_table_row(const rwn_table* t, size_t i, rwn_eigen_result* out) {
    if (!t || !out || i >= t->t.rows.size())
        return fail(RWN_ERR_INVALID_ARGUMENT, "row index out of range");
    fill_result(t->t.rows[i], out);
    return RWN_OK;
}

rwn_status rwn_table_write(const rwn_table* t, const char* path, int as_json) {
    if (!t || !path)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { rwn::io::write_table_file(t->t, path, as_json != 0); });
}

rwn_status rwn_table_read(const char* path, int as_json, rwn_table** out) {
    if (!path || !out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        auto table = std::make_unique<rwn_table>();
        table->t = rwn::io::read_table_file(path, as_json != 0);
        *out = table.release();
    });
}

rwn_status rwn_barrier_check_all(const rwn_params* p, int k_pos, long grid,
                                 rwn_barrier_report* reports, size_t cap, size_t* n_out) {
    if (!p || !reports || !n_out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        const auto rs = rwn::barriers::check_all(p->p, k_pos, grid);
        *n_out = rs.size();
        for (size_t i = 0; i < rs.size() && i < cap; ++i) {
            copy_str(reports[i].name, sizeof reports[i].name, rs[i].name);
            reports[i].grid = rs[i].grid;
            reports[i].min_margin = rs[i].min_margin;
            reports[i].passed = rs[i].passed;
            reports[i].hypotheses_ok = rs[i].hypotheses_ok;
        }
    });
}

rwn_status rwn_barrier_nodes(const rwn_params* p, int k, double delta, double* a_k,
                             double* b_k) {
    if (!p || !a_k || !b_k)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        const auto [a, b] = rwn::barriers::barrier_nodes(k, p->p, delta);
        *a_k = a;
        *b_k = b;
    });
}

rwn_status rwn_oracle_sommerfeld(int n, int k, double z, double alpha, double* eps,
                                 int* in_range) {
    if (!eps || !in_range)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        const auto v = rwn::oracle::sommerfeld(n, k, z, alpha);
        *eps = v.eps;
        *in_range = v.in_range;
    });
}

rwn_status rwn_oracle_bohr(int n, double z, double alpha, double grav_term, double* out) {
    if (!out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = rwn::oracle::bohr(n, z, alpha, grav_term); });
}

size_t rwn_oracle_landmark_count(void) { return rwn::oracle::fig1_landmarks().size(); }

rwn_status rwn_oracle_landmark(size_t i, char* curve, size_t curve_len, double* z,
                               double* eps, double* z_tol) {
    const auto marks = rwn::oracle::fig1_landmarks();
    if (i >= marks.size())
        return fail(RWN_ERR_INVALID_ARGUMENT, "landmark index out of range");
    if (curve && curve_len)
        copy_str(curve, curve_len, marks[i].curve);
    if (z)
        *z = marks[i].z;
    if (eps)
        *eps = marks[i].eps;
    if (z_tol)
        *z_tol = marks[i].z_tolerance;
    return RWN_OK;
}

void rwn_radial_options_defaults(rwn_radial_options* o) {
    const rwn::wavefunction::ReconstructOptions r;
    o->r0 = r.r0;
    o->r_max = r.r_max;
    o->r_ref = r.r_ref;
    o->samples_per_decade = r.samples_per_decade;
    o->require_connector = r.require_connector;
}

rwn_status rwn_radial_reconstruct(const rwn_params* p, double eps,
                                  const rwn_radial_options* o, rwn_radial** out) {
    if (!p || !o || !out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        rwn::wavefunction::ReconstructOptions r;
        r.r0 = o->r0;
        r.r_max = o->r_max;
        r.r_ref = o->r_ref;
        r.samples_per_decade = o->samples_per_decade;
        r.require_connector = o->require_connector != 0;
        auto sol = std::make_unique<rwn_radial>();
        sol->sol = rwn::wavefunction::reconstruct(p->p, eps, r);
        *out = sol.release();
    });
}

void rwn_radial_free(rwn_radial* sol) { delete sol; }

size_t rwn_radial_size(const rwn_radial* sol) { return sol->sol.r.size(); }

rwn_status rwn_radial_sample(const rwn_radial* sol, size_t i, double* r, double* u,
                             double* v, double* R, double* omega) {
    if (!sol || i >= sol->sol.r.size())
        return fail(RWN_ERR_INVALID_ARGUMENT, "sample index out of range");
    if (r)
        *r = sol->sol.r[i];
    if (u)
        *u = sol->sol.u[i];
    if (v)
        *v = sol->sol.v[i];
    if (R)
        *R = sol->sol.R[i];
    if (omega)
        *omega = sol->sol.omega[i];
    return RWN_OK;
}

double rwn_radial_norm(const rwn_radial* sol) { return sol->sol.norm; }

rwn_status rwn_radial_write_csv(const rwn_radial* sol, const char* path) {
    if (!sol || !path)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        std::ofstream os(path, std::ios::binary);
        if (!os)
            throw rwn::Error(rwn::ErrorCode::io, std::string("cannot open: ") + path);
        rwn::io::write_radial_csv(sol->sol, os);
    });
}

rwn_status rwn_radial_fit_small_r(const rwn_radial* sol, double* out) {
    if (!sol || !out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = rwn::wavefunction::fit_small_r_exponent(sol->sol); });
}

rwn_status rwn_radial_fit_far_field(const rwn_radial* sol, double r_lo, double r_hi,
                                    double* out) {
    if (!sol || !out)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] { *out = rwn::wavefunction::fit_far_field_rate(sol->sol, r_lo, r_hi); });
}

rwn_status rwn_small_r_exponent(const rwn_params* p, double* value, int* is_power_law) {
    if (!p || !value || !is_power_law)
        return fail(RWN_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        const auto e = rwn::wavefunction::small_r_exponent(p->p);
        *value = e.value;
        *is_power_law = e.kind == rwn::wavefunction::SmallRKind::power_law;
    });
}

} // extern "C"
