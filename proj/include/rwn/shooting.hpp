#ifndef RWN_SHOOTING_HPP
#define RWN_SHOOTING_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rwn/dynsys.hpp"
#include "rwn/integrator.hpp"
#include "rwn/params.hpp"

namespace rwn::shooting {

struct SolveOptions {
    double r0 = 1e-6;
    double eta_max = 1.0 - 1e-9;
    double eps_tol = 1e-13;
    // arccos is singular at eps = ±1 and ±1 are not in the point spectrum;
    // the search stays inside (-1 + edge_guard, 1 - edge_guard).
    double edge_guard = 1e-6;
    double band_tol = 1e-6; // radians; closer than this to the saddle is undecided
    double seed_margin = 1e-4;
    double scan_resolution = 1e-3;
    int max_bisections = 200;
    ode::IntegratorConfig ode_cfg;
};

enum class NodeClass { node_above, node_below, undecided };

// Summary of one launched orbit: the lift is read at the eta cutoff and the
// winding number is the index of the nearest node lift -2 pi w + arccos eps.
struct OrbitOutcome {
    long winding = 0;
    double terminal_omega_lift = 0.0;
    double terminal_eta = 0.0;
    NodeClass classification = NodeClass::undecided;
    long steps = 0;
};

// Integrates the lifted flow from (eta(r0), 0) until eta >= eta_max.
// Optionally stores the full trajectory (tau, eta, omega_lift samples).
OrbitOutcome launch_orbit(double eps, const ModelParams& p, const SolveOptions& opts,
                          ode::Trajectory<2>* trajectory = nullptr);

enum class RecordStatus { ok, bracket_not_found, undecided, error };

const char* record_status_csv(RecordStatus s);   // ok | absent | error
const char* record_status_name(RecordStatus s);  // fine-grained

struct EigenvalueRecord {
    double z = 0.0;
    int k = 0;
    int N = 0;
    int n = 0; // N + |k|
    double eps = 0.0;
    double bracket_width = 0.0;
    long iterations = 0;
    std::optional<double> oracle_eps;
    RecordStatus status = RecordStatus::error;
    std::string detail;
};

struct SpectralTable {
    std::vector<EigenvalueRecord> rows;
};

// Initial bracket for the bisection: seeded from the Sommerfeld value when the
// oracle applies (small lambda and g_ratio), widened geometrically until the
// winding predicate straddles; otherwise located on a uniform eps grid of the
// given resolution. Throws bracket_not_found when no transition exists inside
// the guarded interval.
std::pair<double, double> scan_bracket(int k, int N, const ModelParams& p,
                                       const SolveOptions& opts,
                                       std::optional<double> seed = std::nullopt);

// Bisection on the integer predicate winding(eps) >= N+1. The bracket is
// halved until its width drops below eps_tol; the midpoint is reported
// together with the final width, iteration count and the Sommerfeld
// comparison value when defined. Failures are reported in the status field.
EigenvalueRecord find_eigenvalue(int k, int N, const ModelParams& p,
                                 std::optional<double> seed, const SolveOptions& opts);

struct SweepOptions {
    SolveOptions solve;
    int jobs = 1;
    // Rows already computed (resume): matching (z,k,N) cells are copied
    // through instead of recomputed, and still seed their curve neighbors.
    const SpectralTable* resume_from = nullptr;
    // Called once per freshly computed record (serialized internally);
    // lets callers persist partial progress.
    std::function<void(const EigenvalueRecord&)> on_record;
};

// One record per (Z, k, N) cell with n = N + |k| <= n_max. Within a (k, N)
// curve the previous Z's eigenvalue seeds the next bracket; curves are
// independent and may run on a worker pool. Per-cell failures are recorded,
// never thrown. Rows come back sorted by (Z, k, N).
SpectralTable spectrum_sweep(const std::vector<double>& z_values,
                             const std::vector<int>& k_values, int n_max,
                             const PhysicalInput& base, const SweepOptions& opts);

} // namespace rwn::shooting

#endif
