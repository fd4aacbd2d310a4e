#include "rwn/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "rwn/error.hpp"
#include "rwn/metric.hpp"
#include "rwn/oracle.hpp"

namespace rwn::shooting {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void validate_options(const SolveOptions& o) {
    if (!(o.r0 > 0.0) || !(o.eta_max < 1.0) || !(metric::eta_of_r(o.r0) < o.eta_max))
        throw Error(ErrorCode::invalid_argument, "solve options: need 0 < eta(r0) < eta_max < 1");
    if (!(o.eps_tol > 0.0) || !(o.edge_guard > 0.0) || !(o.band_tol > 0.0))
        throw Error(ErrorCode::invalid_argument, "solve options: tolerances must be positive");
}

long winding_of_lift(double eps, double terminal_lift) {
    return std::llround((std::acos(eps) - terminal_lift) / two_pi);
}

} // namespace

namespace {

// Lifted attracting root of the angle equation at fixed eta, nearest to the
// given lift; NaN when the roots do not exist or their persistence down to
// eta = 1 is not guaranteed by the margin test.
double attracting_root(double eta, double omega_lift, double eps, const ModelParams& p) {
    const auto co = dynsys::angular_coefficients(eta, eps, p);
    const double amp = std::hypot(co.a, co.b);
    const double q = amp - std::abs(co.c);
    // Coefficients drift at most at this rate on (eta, 1]; a margin above it
    // keeps the root pair from folding before the cylinder end.
    const double drift = 12.0 + 2.0 * std::abs(p.k) + 4.0 * p.lambda + 2.0 * std::abs(p.gamma);
    if (!(q > 2.0 * drift * (1.0 - eta)))
        return std::numeric_limits<double>::quiet_NaN();
    const double phi = std::atan2(co.b, co.a);
    const double theta = std::acos(std::clamp(-co.c / amp, -1.0, 1.0));
    double att = phi + theta;
    att += two_pi * std::round((omega_lift - att) / two_pi);
    return att;
}

// The terminal relaxation onto the node is exponential in tau at the order-one
// rate 2 sqrt(1-eps^2) while eta creeps to the cutoff algebraically, which
// stability-limits any explicit stepper. Once the orbit hugs the attracting
// root this tightly its fate is sealed (the angle equation is scalar, so the
// moving root cannot be crossed), and the terminal lift at the cutoff is the
// root evaluated there.
constexpr double settle_tol = 1e-8;

} // namespace

OrbitOutcome launch_orbit(double eps, const ModelParams& p, const SolveOptions& opts,
                          ode::Trajectory<2>* trajectory) {
    validate_options(opts);
    if (!(eps > -1.0) || !(eps < 1.0))
        throw Error(ErrorCode::domain, "launch_orbit: eps must lie in (-1,1)");
    if (p.k == 0)
        throw Error(ErrorCode::invalid_argument, "launch_orbit: k must be nonzero");

    const double eta0 = metric::eta_of_r(opts.r0);
    const double t0 = dynsys::tau_of_r(opts.r0, p.flat());
    const double t_end = dynsys::tau_of_r(metric::r_of_eta(opts.eta_max), p.flat()) + 10.0;

    auto field = [&p, eps](double, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        const auto d = dynsys::rhs_tau_raw(y[0], y[1], eps, p);
        dy[0] = d[0];
        dy[1] = d[1];
    };
    auto event = [&opts, &p, eps](double, const std::array<double, 2>& y) {
        double score = y[0] - opts.eta_max;
        if (y[0] >= 0.999) {
            const double att = attracting_root(y[0], y[1], eps, p);
            if (std::isfinite(att))
                score = std::max(score, settle_tol - std::abs(y[1] - att));
        }
        return score;
    };

    auto traj = ode::integrate<2>(field, {eta0, 0.0}, t0, t_end, opts.ode_cfg, event);
    if (traj.status == ode::TrajectoryStatus::step_limit)
        throw Error(ErrorCode::step_limit, "launch_orbit: integrator exceeded max_steps");

    OrbitOutcome out;
    out.terminal_eta = traj.y_end()[0];
    out.terminal_omega_lift = traj.y_end()[1];
    out.steps = traj.steps_accepted;
    if (out.terminal_eta < opts.eta_max) {
        // Node-locked stop: report the certified limit at the cutoff.
        const double att =
            attracting_root(opts.eta_max, out.terminal_omega_lift, eps, p);
        if (std::isfinite(att)) {
            out.terminal_omega_lift = att;
            out.terminal_eta = opts.eta_max;
        }
    }
    out.winding = winding_of_lift(eps, out.terminal_omega_lift);

    const double ac = std::acos(eps);
    const double saddle_below = -two_pi * out.winding - ac; // below the nearest node
    const double saddle_above = -two_pi * (out.winding - 1) - ac;
    const double t = out.terminal_omega_lift;
    if (std::min(std::abs(t - saddle_below), std::abs(t - saddle_above)) < opts.band_tol)
        out.classification = NodeClass::undecided;
    else
        out.classification = t > saddle_below ? NodeClass::node_above : NodeClass::node_below;

    if (trajectory)
        *trajectory = std::move(traj);
    return out;
}

const char* record_status_csv(RecordStatus s) {
    switch (s) {
        case RecordStatus::ok: return "ok";
        case RecordStatus::bracket_not_found: return "absent";
        default: return "error";
    }
}

const char* record_status_name(RecordStatus s) {
    switch (s) {
        case RecordStatus::ok: return "ok";
        case RecordStatus::bracket_not_found: return "bracket-not-found";
        case RecordStatus::undecided: return "undecided";
        default: return "error";
    }
}

namespace {

std::optional<double> sommerfeld_seed(int k, int N, const ModelParams& p) {
    // The oracle seeds only where it is close: small anomalous moment and
    // gravity below the resolution threshold.
    if (p.lambda > 1e-2 || p.g_ratio > 1e-6)
        return std::nullopt;
    const int n = N + std::abs(k);
    if (k == n)
        return std::nullopt;
    const auto v = oracle::sommerfeld(n, k, p.z(), p.alpha);
    if (!v.in_range)
        return std::nullopt;
    return v.eps;
}

} // namespace

std::pair<double, double> scan_bracket(int k, int N, const ModelParams& pin,
                                       const SolveOptions& opts, std::optional<double> seed) {
    const ModelParams p = pin.with_k(k);
    const double lo_edge = -1.0 + opts.edge_guard;
    const double hi_edge = 1.0 - opts.edge_guard;
    auto winding_at = [&](double eps) { return launch_orbit(eps, p, opts).winding; };

    if (!seed)
        seed = sommerfeld_seed(k, N, p);

    if (seed) {
        double lo = std::clamp(*seed - opts.seed_margin, lo_edge, hi_edge);
        double hi = std::clamp(*seed + opts.seed_margin, lo_edge, hi_edge);
        long wlo = winding_at(lo);
        for (double m = opts.seed_margin; wlo > N; m *= 2.0) {
            if (lo <= lo_edge)
                throw Error(ErrorCode::bracket_not_found,
                            "scan_bracket: winding exceeds N down to the -1 edge guard");
            lo = std::max(lo_edge, lo - m);
            wlo = winding_at(lo);
        }
        long whi = winding_at(hi);
        for (double m = opts.seed_margin; whi <= N; m *= 2.0) {
            if (hi >= hi_edge)
                throw Error(ErrorCode::bracket_not_found,
                            "scan_bracket: no winding transition below the +1 edge guard");
            hi = std::min(hi_edge, hi + m);
            whi = winding_at(hi);
        }
        return {lo, hi};
    }

    // Unseeded: locate the transition on a uniform grid. Winding is
    // non-decreasing in eps, so the grid can be searched by bisection.
    if (winding_at(lo_edge) > N)
        throw Error(ErrorCode::bracket_not_found,
                    "scan_bracket: winding exceeds N at the -1 edge guard");
    if (winding_at(hi_edge) <= N)
        throw Error(ErrorCode::bracket_not_found,
                    "scan_bracket: no winding transition below the +1 edge guard");
    const long cells = std::max<long>(
        1, std::lround(std::ceil((hi_edge - lo_edge) / opts.scan_resolution)));
    auto grid_eps = [&](long i) {
        return i >= cells ? hi_edge : lo_edge + (hi_edge - lo_edge) * i / cells;
    };
    long ilo = 0, ihi = cells;
    while (ihi - ilo > 1) {
        const long mid = ilo + (ihi - ilo) / 2;
        if (winding_at(grid_eps(mid)) >= N + 1)
            ihi = mid;
        else
            ilo = mid;
    }
    return {grid_eps(ilo), grid_eps(ihi)};
}

EigenvalueRecord find_eigenvalue(int k, int N, const ModelParams& pin,
                                 std::optional<double> seed, const SolveOptions& opts) {
    if (k == 0)
        throw Error(ErrorCode::invalid_argument, "find_eigenvalue: k must be nonzero");
    // For k >= 1 there is no winding-0 connector on eps in [0,1); the search
    // still runs for N = 0 and comes back bracket-not-found.
    if (N < 0)
        throw Error(ErrorCode::invalid_argument, "find_eigenvalue: N must be >= 0");
    validate_options(opts);

    const ModelParams p = pin.with_k(k);
    EigenvalueRecord rec;
    rec.z = p.z();
    rec.k = k;
    rec.N = N;
    rec.n = N + std::abs(k);
    {
        const int n = rec.n;
        if (k != n) {
            const auto v = oracle::sommerfeld(n, k, p.z(), p.alpha);
            if (v.in_range)
                rec.oracle_eps = v.eps;
        }
    }

    try {
        auto [lo, hi] = scan_bracket(k, N, p, opts, seed);
        long iters = 0;
        while (hi - lo > opts.eps_tol && iters < opts.max_bisections) {
            const double mid = 0.5 * (lo + hi);
            const auto out = launch_orbit(mid, p, opts);
            if (out.winding >= N + 1)
                hi = mid;
            else
                lo = mid;
            ++iters;
        }
        rec.eps = 0.5 * (lo + hi);
        rec.bracket_width = hi - lo;
        rec.iterations = iters;
        const auto final_out = launch_orbit(rec.eps, p, opts);
        rec.status = final_out.classification == NodeClass::undecided ? RecordStatus::undecided
                                                                      : RecordStatus::ok;
        if (rec.status == RecordStatus::undecided)
            rec.detail = "orbit within band_tol of the saddle at the final bracket";
    } catch (const Error& e) {
        rec.status = e.code() == ErrorCode::bracket_not_found ? RecordStatus::bracket_not_found
                                                              : RecordStatus::error;
        rec.detail = e.what();
    }
    return rec;
}

namespace {

struct Curve {
    int k;
    int N;
};

} // namespace

SpectralTable spectrum_sweep(const std::vector<double>& z_values,
                             const std::vector<int>& k_values, int n_max,
                             const PhysicalInput& base, const SweepOptions& opts) {
    std::vector<Curve> curves;
    for (int k : k_values) {
        if (k == 0)
            continue;
        for (int N = (k >= 1 ? 1 : 0); N + std::abs(k) <= n_max; ++N)
            curves.push_back({k, N});
    }

    auto resumed = [&](double z, int k, int N) -> const EigenvalueRecord* {
        if (!opts.resume_from)
            return nullptr;
        for (const auto& r : opts.resume_from->rows)
            if (r.z == z && r.k == k && r.N == N)
                return &r;
        return nullptr;
    };

    std::vector<std::vector<EigenvalueRecord>> per_curve(curves.size());
    std::mutex next_mutex;
    std::size_t next = 0;

    std::mutex record_mutex;
    auto run_curve = [&](const Curve& c, std::vector<EigenvalueRecord>& rows) {
        std::optional<double> seed;
        for (double z : z_values) {
            if (const auto* prev = resumed(z, c.k, c.N)) {
                rows.push_back(*prev);
                if (prev->status == RecordStatus::ok)
                    seed = prev->eps;
                continue;
            }
            EigenvalueRecord rec;
            try {
                PhysicalInput in = base;
                in.z = z;
                const ModelParams p = derive_params(in);
                rec = find_eigenvalue(c.k, c.N, p, seed, opts.solve);
            } catch (const std::exception& e) {
                rec = EigenvalueRecord{};
                rec.z = z;
                rec.k = c.k;
                rec.N = c.N;
                rec.n = c.N + std::abs(c.k);
                rec.status = RecordStatus::error;
                rec.detail = e.what();
            }
            if (rec.status == RecordStatus::ok)
                seed = rec.eps;
            if (opts.on_record) {
                std::lock_guard<std::mutex> lock(record_mutex);
                opts.on_record(rec);
            }
            rows.push_back(rec);
        }
    };

    auto worker = [&]() {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(next_mutex);
                if (next >= curves.size())
                    return;
                i = next++;
            }
            run_curve(curves[i], per_curve[i]);
        }
    };

    const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(curves.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int i = 0; i < jobs; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    SpectralTable table;
    for (auto& rows : per_curve)
        for (auto& r : rows)
            table.rows.push_back(std::move(r));
    std::sort(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
        if (a.z != b.z)
            return a.z < b.z;
        if (a.k != b.k)
            return a.k < b.k;
        return a.N < b.N;
    });
    return table;
}

} // namespace rwn::shooting
