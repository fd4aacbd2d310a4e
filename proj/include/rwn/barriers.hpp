#ifndef RWN_BARRIERS_HPP
#define RWN_BARRIERS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rwn/params.hpp"

namespace rwn::barriers {

struct BarrierReport {
    std::string name;
    long grid = 0;
    double min_margin = 0.0;
    bool passed = false; // min_margin > 0
    bool hypotheses_ok = false;
    double arg_min = 0.0;
};

// Fixed constants of the slanted-barrier construction (the source values are
// stated as non-strict; they are parameters here but asserted only at these).
struct SlantedConstants {
    double nu = 3.0;
    double delta = 1.01; // 1 + (A/Z*)^2 with A = 0.1 Z*
    double lambda_cap(double alpha) const { return alpha / (2.0 * std::numbers::pi) / (nu * delta); }
};

// Upper barrier at Omega = pi, worst case eps = -1, certified through the
// quadratic reformulation Q(eta) < 0 on [0,1]; margin is -Q.
BarrierReport check_upper_barrier(const ModelParams& p, long grid = 100000);

// Lower barrier at Omega = -pi/2 for k <= -1, eps = 0: the worst-case
// polynomial p(eta) = g^2|_{A*=Z*/2} (eta + (3Z*/2)(1-eta))^2 - gamma^2 eta^4
// must be positive on [0,1].
BarrierReport check_lower_barrier_neg_k(const ModelParams& p, long grid = 100000);

// Coefficients (a3,a2,a1,a0) of the quartic factor in p1 = p - eta^4(1-gamma^2);
// all positive for 0 < Z* <= sqrt(G).
std::array<double, 4> lower_barrier_coefficients(double z_star);

// Corner abscissas of the piecewise lower barrier for k >= 1:
//   a_k = lambda/(k + lambda - delta gamma), b_k = lambda/(k + lambda + delta gamma).
// Requires gamma in (-1/delta, 0) so that b_k lies in (0,1).
std::pair<double, double> barrier_nodes(int k, const ModelParams& p, double delta);

// Horizontal segments of that barrier: the slope field points up through
// Omega = -pi/2 on [0, a_k] and through Omega = -3pi/2 on [b_k, 1] (eps = 0).
// Certified in the reduced form (common positive factor 2(1-eta)/g removed).
BarrierReport check_horiz_barriers(int k, const ModelParams& p, long grid = 100000,
                                   const SlantedConstants& c = {});

// Slanted segment joining (a_k, -pi/2) to (b_k, -3pi/2): both proof conditions,
// C^2 - A^2 - B^2 > 0 and A + C > 0, on [a_k, b_k] for all Omega at once.
BarrierReport check_slanted_barrier(int k, const ModelParams& p, long grid = 100000,
                                    const SlantedConstants& c = {});

// The proof's closing inequality u(k) < v(k); u(1) ~ 5.89 and v(1) ~ 6.19.
double slanted_proof_lhs(int k, double alpha = constants::alpha_fs,
                         const SlantedConstants& c = {});
double slanted_proof_rhs(int k, double alpha = constants::alpha_fs,
                         const SlantedConstants& c = {});

// Upper barrier for k >= 1 (eps = 0): the slanted line from (eta_0, 0) to
// (1, -pi) with eta_0 = 0.0003; certifies j(eta) < 0 on [eta_0, 1] where j
// assembles the term-by-term bound h plus the line-slope term.
BarrierReport check_eta0_barrier(const ModelParams& p, long grid = 100000);

// Lower bound, at Z* = alpha sqrt(G)/2, of the eta below which the slope field
// is negative along Omega = 0; evaluates to ~0.00364.
double eta0_crossing_bound(double alpha = constants::alpha_fs,
                           double g_ratio = constants::g_ratio_physical);

// All five checks (the k-dependent ones at the given positive k).
std::vector<BarrierReport> check_all(const ModelParams& p, int k_pos = 1, long grid = 100000);

} // namespace rwn::barriers

#endif
