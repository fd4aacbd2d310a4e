// Command-line front end. Everything goes through the C API in rwn/rwndirac.h.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rwn/rwndirac.h"

namespace {

struct Cleanup {
    rwn_params* params = nullptr;
    ~Cleanup() { rwn_params_free(params); }
};

[[noreturn]] void die(const std::string& msg, int code = 1) {
    std::fprintf(stderr, "rwndirac: %s\n", msg.c_str());
    std::exit(code);
}

void check(rwn_status s, const char* what) {
    if (s != RWN_OK) {
        std::fprintf(stderr, "rwndirac: %s: %s (%s)\n", what, rwn_last_error(),
                     rwn_status_name(s));
        std::exit(1);
    }
}

// Inclusive lo:hi:step ranges; a bare number is a one-element range.
std::vector<double> parse_range(const std::string& text) {
    std::vector<double> parts;
    std::string cur;
    for (char ch : text + ":") {
        if (ch == ':') {
            if (cur.empty())
                die("bad range '" + text + "'", 2);
            parts.push_back(std::stod(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (parts.size() == 1)
        return {parts[0]};
    if (parts.size() == 2)
        parts.push_back(1.0);
    if (parts.size() != 3 || parts[2] <= 0.0)
        die("bad range '" + text + "' (want lo:hi:step with step > 0)", 2);
    std::vector<double> out;
    for (double v = parts[0]; v <= parts[1] + 1e-12 * parts[2]; v += parts[2])
        out.push_back(v);
    return out;
}

std::vector<int> parse_int_range(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_range(text))
        out.push_back(static_cast<int>(std::llround(v)));
    return out;
}

std::string default_output(const std::string& name) {
    const char* dir = std::getenv("RWNDIRAC_OUTPUT_DIR");
    return (std::filesystem::path(dir && *dir ? dir : ".") / name).string();
}

struct CommonOpts {
    rwn_physical_input in{};
    rwn_solve_options solve{};
    bool flat = false;
    double lambda_override = 0.0;
    bool has_lambda = false;
    int jobs = 1;
    std::string format = "csv";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    rwn_physical_input_defaults(&c.in);
    rwn_solve_options_defaults(&c.solve);
    cmd->add_option("--a-mass", c.in.A, "nuclear mass number A")->capture_default_str();
    cmd->add_option("--a", c.in.amm, "anomalous moment coefficient a (Bohr magnetons)")
        ->capture_default_str();
    cmd->add_option("--g-ratio", c.in.g_ratio, "gravity/electricity coupling ratio")
        ->capture_default_str();
    cmd->add_flag("--flat", c.flat, "force g_ratio = 0 (Minkowski mode)");
    cmd->add_option("--lambda", c.lambda_override, "set lambda directly (validation mode)")
        ->each([&c](const std::string&) { c.has_lambda = true; });
    cmd->add_option("--mass-ratio", c.in.mass_ratio, "proton/electron mass ratio")
        ->capture_default_str();
    cmd->add_option("--alpha", c.in.alpha, "fine structure constant")->capture_default_str();
    cmd->add_option("--r0", c.solve.r0, "launch radius")->capture_default_str();
    cmd->add_option("--eta-max", c.solve.eta_max, "eta cutoff")->capture_default_str();
    cmd->add_option("--eps-tol", c.solve.eps_tol, "bisection bracket tolerance")
        ->capture_default_str();
    cmd->add_option("--abs-tol", c.solve.ode_abs_tol, "ODE absolute tolerance")
        ->capture_default_str();
    cmd->add_option("--rel-tol", c.solve.ode_rel_tol, "ODE relative tolerance")
        ->capture_default_str();
    cmd->add_option("--band-tol", c.solve.band_tol, "node classification band (radians)")
        ->capture_default_str();
    cmd->add_option("--edge-guard", c.solve.edge_guard, "keep-out distance from eps = ±1")
        ->capture_default_str();
    cmd->add_option("--scan-resolution", c.solve.scan_resolution, "unseeded bracket grid step")
        ->capture_default_str();
    cmd->add_option("--jobs", c.jobs, "parallel workers for sweeps")->capture_default_str();
    cmd->add_option("--format", c.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output,-o", c.output, "output path");
}

rwn_params* make_params(CommonOpts& c, double z, int k) {
    c.in.Z = z;
    c.in.k = k;
    if (c.flat)
        c.in.g_ratio = 0.0;
    c.in.has_lambda_override = c.has_lambda;
    c.in.lambda_override = c.lambda_override;
    rwn_params* p = nullptr;
    check(rwn_params_derive(&c.in, &p), "deriving parameters");
    if (!rwn_params_self_adjoint(p))
        std::fprintf(stderr,
                     "rwndirac: warning: lambda < (3/2) Z*, below the self-adjointness "
                     "threshold\n");
    return p;
}

void print_result(const rwn_eigen_result& r) {
    std::printf("Z=%.17g k=%d N=%d n=%d\n", r.Z, r.k, r.N, r.n);
    std::printf("status         = %s (%s)\n", r.status, r.detail);
    if (r.ok) {
        std::printf("epsilon        = %.17g\n", r.epsilon);
        std::printf("bracket_width  = %.17g\n", r.bracket_width);
    }
    if (r.has_oracle) {
        std::printf("oracle_epsilon = %.17g\n", r.oracle_epsilon);
        if (r.ok)
            std::printf("delta          = %.17g\n", r.epsilon - r.oracle_epsilon);
    }
    std::printf("iterations     = %ld\n", r.iterations);
}

int run_spectrum(CommonOpts& c, const std::string& z_text, const std::string& k_text,
                 int n_max, bool resume) {
    const auto zs = parse_range(z_text);
    const auto ks = parse_int_range(k_text);
    if (c.output.empty())
        c.output = default_output(c.format == "json" ? "spectrum.json" : "spectrum.csv");
    const std::string partial = c.output + ".partial";

    rwn_sweep_spec spec{};
    spec.z_values = zs.data();
    spec.n_z = zs.size();
    spec.k_values = ks.data();
    spec.n_k = ks.size();
    spec.n_max = n_max;
    c.in.Z = zs.empty() ? 1.0 : zs[0];
    if (c.flat)
        c.in.g_ratio = 0.0;
    c.in.has_lambda_override = c.has_lambda;
    c.in.lambda_override = c.lambda_override;
    spec.base = c.in;
    spec.solve = c.solve;
    spec.jobs = c.jobs;
    spec.partial_path = partial.c_str();
    spec.resume_path = resume && std::filesystem::exists(partial) ? partial.c_str() : nullptr;

    rwn_table* table = nullptr;
    check(rwn_sweep_run(&spec, &table), "running sweep");
    check(rwn_table_write(table, c.output.c_str(), c.format == "json"), "writing table");
    std::printf("wrote %zu rows to %s\n", rwn_table_size(table), c.output.c_str());
    rwn_table_free(table);
    std::filesystem::remove(partial);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Dirac spectrum of a point electron with anomalous magnetic "
                 "moment in the Reissner-Weyl-Nordstrom spacetime of a point nucleus"};
    app.set_config("--config", "", "flat key=value configuration file");
    app.require_subcommand(1);

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "sweep eigenvalues over Z and (k, N)");
    CommonOpts sp_c;
    std::string sp_z = "1:20:1", sp_k = "-2:2";
    int sp_nmax = 2;
    bool sp_resume = false;
    sp->add_option("--z", sp_z, "Z range lo:hi:step")->capture_default_str();
    sp->add_option("--k", sp_k, "k range lo:hi:step (0 skipped)")->capture_default_str();
    sp->add_option("--n-max", sp_nmax, "largest principal quantum number")
        ->capture_default_str();
    sp->add_flag("--resume", sp_resume, "reuse rows from <output>.partial");
    add_common(sp, sp_c);

    // eigen
    auto* eg = app.add_subcommand("eigen", "locate one eigenvalue");
    CommonOpts eg_c;
    double eg_z = 1.0, eg_seed = 0.0;
    int eg_k = -1, eg_N = 0;
    bool eg_has_seed = false;
    std::string eg_radial;
    double eg_radial_r0 = 0.0, eg_radial_rmax = 0.0;
    eg->add_option("--z", eg_z, "nuclear charge Z")->capture_default_str();
    eg->add_option("--k", eg_k, "spin-orbit quantum number")->capture_default_str();
    eg->add_option("--N", eg_N, "winding number")->capture_default_str();
    eg->add_option("--seed", eg_seed, "initial bracket seed for eps")
        ->each([&eg_has_seed](const std::string&) { eg_has_seed = true; });
    eg->add_option("--radial", eg_radial, "write the radial solution CSV here");
    eg->add_option("--radial-r0", eg_radial_r0, "radial grid start (default: launch r0)");
    eg->add_option("--radial-rmax", eg_radial_rmax, "radial grid end");
    add_common(eg, eg_c);

    // orbit
    auto* ob = app.add_subcommand("orbit", "integrate one orbit and dump the trajectory");
    CommonOpts ob_c;
    double ob_z = 1.0, ob_eps = 0.5;
    int ob_k = -1;
    ob->add_option("--z", ob_z, "nuclear charge Z")->capture_default_str();
    ob->add_option("--k", ob_k, "spin-orbit quantum number")->capture_default_str();
    ob->add_option("--eps", ob_eps, "energy parameter in (-1,1)")->capture_default_str();
    add_common(ob, ob_c);

    // verify-barriers
    auto* vb = app.add_subcommand("verify-barriers", "grid-certify the barrier inequalities");
    CommonOpts vb_c;
    double vb_z = 1.0;
    int vb_k = 1;
    long vb_grid = 100000;
    vb->add_option("--z", vb_z, "nuclear charge Z")->capture_default_str();
    vb->add_option("--k", vb_k, "positive k for the k-dependent barriers")
        ->capture_default_str();
    vb->add_option("--grid", vb_grid, "grid density")->capture_default_str();
    add_common(vb, vb_c);

    // oracle
    auto* orc = app.add_subcommand("oracle", "closed-form reference values");
    orc->require_subcommand(1);
    auto* os = orc->add_subcommand("sommerfeld", "fine structure eigenvalue");
    int os_n = 1, os_k = -1;
    double os_z = 1.0, os_alpha = 0.0;
    os->add_option("--n", os_n, "principal quantum number")->capture_default_str();
    os->add_option("--k", os_k, "spin-orbit quantum number")->capture_default_str();
    os->add_option("--z", os_z, "nuclear charge Z")->capture_default_str();
    os->add_option("--alpha", os_alpha, "fine structure constant (default 1/137.036)");
    auto* obh = orc->add_subcommand("bohr", "non-relativistic spectrum");
    int obh_n = 1;
    double obh_z = 1.0, obh_alpha = 0.0, obh_grav = 0.0;
    obh->add_option("--n", obh_n, "principal quantum number")->capture_default_str();
    obh->add_option("--z", obh_z, "nuclear charge Z")->capture_default_str();
    obh->add_option("--alpha", obh_alpha, "fine structure constant (default 1/137.036)");
    obh->add_option("--grav-term", obh_grav, "dimensionless G M m_e / hbar c")
        ->capture_default_str();
    auto* olm = orc->add_subcommand("landmarks", "eigenvalue-plot landmarks");

    CLI11_PARSE(app, argc, argv);

    if (sp->parsed())
        return run_spectrum(sp_c, sp_z, sp_k, sp_nmax, sp_resume);

    if (eg->parsed()) {
        Cleanup c{make_params(eg_c, eg_z, eg_k)};
        rwn_eigen_result res{};
        check(rwn_eigen_find(c.params, eg_k, eg_N, &eg_c.solve, eg_has_seed, eg_seed, &res),
              "eigenvalue search");
        print_result(res);
        if (!eg_radial.empty() && res.ok) {
            rwn_radial_options ro{};
            rwn_radial_options_defaults(&ro);
            ro.r0 = eg_radial_r0 > 0.0 ? eg_radial_r0 : eg_c.solve.r0;
            if (eg_radial_rmax > 0.0)
                ro.r_max = eg_radial_rmax;
            rwn_radial* sol = nullptr;
            check(rwn_radial_reconstruct(c.params, res.epsilon, &ro, &sol),
                  "radial reconstruction");
            check(rwn_radial_write_csv(sol, eg_radial.c_str()), "writing radial CSV");
            std::printf("norm           = %.17g\n", rwn_radial_norm(sol));
            std::printf("radial samples -> %s\n", eg_radial.c_str());
            rwn_radial_free(sol);
        }
        return 0;
    }

    if (ob->parsed()) {
        Cleanup c{make_params(ob_c, ob_z, ob_k)};
        rwn_orbit* orb = nullptr;
        check(rwn_orbit_run(c.params, ob_eps, &ob_c.solve, &orb), "orbit integration");
        std::printf("winding        = %ld\n", rwn_orbit_winding(orb));
        std::printf("terminal_eta   = %.17g\n", rwn_orbit_terminal_eta(orb));
        std::printf("terminal_omega = %.17g\n", rwn_orbit_terminal_omega(orb));
        std::printf("classification = %s\n", rwn_orbit_classification(orb));
        const std::string out = ob_c.output.empty() ? default_output("orbit.csv") : ob_c.output;
        check(rwn_orbit_write_csv(orb, out.c_str()), "writing trajectory CSV");
        std::printf("trajectory     -> %s (%zu samples)\n", out.c_str(),
                    rwn_orbit_sample_count(orb));
        rwn_orbit_free(orb);
        return 0;
    }

    if (vb->parsed()) {
        Cleanup c{make_params(vb_c, vb_z, vb_k > 0 ? vb_k : 1)};
        rwn_barrier_report reports[8];
        size_t n = 0;
        check(rwn_barrier_check_all(c.params, vb_k, vb_grid, reports, 8, &n),
              "barrier checks");
        std::printf("name,grid,min_margin,passed\n");
        for (size_t i = 0; i < n && i < 8; ++i) {
            std::printf("%s,%ld,%.17g,%s\n", reports[i].name, reports[i].grid,
                        reports[i].min_margin, reports[i].passed ? "true" : "false");
            if (!reports[i].hypotheses_ok)
                std::fprintf(stderr, "rwndirac: note: %s run outside its hypotheses\n",
                             reports[i].name);
        }
        return 0;
    }

    if (os->parsed()) {
        double eps = 0.0;
        int in_range = 0;
        const double alpha = os_alpha > 0.0 ? os_alpha : 1.0 / 137.036;
        check(rwn_oracle_sommerfeld(os_n, os_k, os_z, alpha, &eps, &in_range), "oracle");
        if (!in_range) {
            std::printf("out-of-range (Z alpha >= |k|)\n");
            return 0;
        }
        std::printf("%.17g\n", eps);
        return 0;
    }
    if (obh->parsed()) {
        double v = 0.0;
        const double alpha = obh_alpha > 0.0 ? obh_alpha : 1.0 / 137.036;
        check(rwn_oracle_bohr(obh_n, obh_z, alpha, obh_grav, &v), "oracle");
        std::printf("%.17g\n", v);
        return 0;
    }
    if (olm->parsed()) {
        std::printf("curve,Z,eps,z_tolerance\n");
        for (size_t i = 0; i < rwn_oracle_landmark_count(); ++i) {
            char curve[32];
            double z = 0, eps = 0, tol = 0;
            check(rwn_oracle_landmark(i, curve, sizeof curve, &z, &eps, &tol), "oracle");
            std::printf("%s,%g,%g,%g\n", curve, z, eps, tol);
        }
        return 0;
    }
    return 0;
}
