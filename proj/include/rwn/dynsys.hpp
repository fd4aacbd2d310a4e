#ifndef RWN_DYNSYS_HPP
#define RWN_DYNSYS_HPP

#include <array>

#include "rwn/params.hpp"

namespace rwn::dynsys {

// Phase point on the universal cover of the cylinder. omega_lift is kept
// continuous along trajectories; reduction mod 2pi happens only at
// presentation boundaries.
struct CylinderState {
    double eta = 0.0;
    double omega_lift = 0.0;
};

enum class EquilibriumId { s_minus, n_minus, s_plus, n_plus };

// The four equilibrium points in the fundamental domain [0,1] x [-pi, pi]:
//   S- = (0, 0),  N- = (0, -pi),  S+ = (1, -arccos eps),  N+ = (1, arccos eps).
struct Equilibria {
    CylinderState s_minus, n_minus, s_plus, n_plus;
};

Equilibria equilibria(double eps);

// Angle equation in the radial variable,
//   Omega' = (2/f) cos O + (2/f)(k/r - lambda/r^2) sin O + (2/f^2)(gamma/r - eps).
double omega_prime_r(double r, double omega, double eps, const ModelParams& p);

// Log-derivative of the Prufer amplitude,
//   R'/R = (1/f) sin O + (1/f)(-k/r + lambda/r^2) cos O.
double amplitude_log_derivative_r(double r, double omega, const ModelParams& p);

// Autonomous compactified flow. With gravity on:
//   deta   = eta (1-eta)^2
//   domega = (2 eta^2/g) cos O + (2/g)(k eta(1-eta) - lambda (1-eta)^2) sin O
//            + (2 eta^2/g^2)(gamma (1-eta) - eps eta).
// With g_ratio = 0 the compactification degenerates and the flow carries an
// extra factor of eta (time variable rescaled by eta^2 instead of eta):
//   deta   = eta^2 (1-eta)^2
//   domega = 2 eta^2 cos O + 2 (k eta(1-eta) - lambda (1-eta)^2) sin O
//            + 2 eta (gamma (1-eta) - eps eta).
// Returns (deta, domega). Validates eta in [0,1].
std::array<double, 2> rhs_tau(const CylinderState& s, double eps, const ModelParams& p);

// Same field without the domain check; integrator stages may transiently
// poke slightly past eta = 1.
std::array<double, 2> rhs_tau_raw(double eta, double omega, double eps, const ModelParams& p);

// d(domega)/d(eps) at fixed state: -2 eta^3/g^2 (curved), -2 eta^2 (flat).
// Non-positive everywhere; the comparison fact behind winding monotonicity.
double domega_deps(const CylinderState& s, const ModelParams& p);

// The angle equation at fixed eta is harmonic in Omega:
//   domega = a cos(Omega) + b sin(Omega) + c.
// Its roots (when sqrt(a^2+b^2) > |c|) are phi ± arccos(-c/R) with
// phi = atan2(b, a); the + branch is attracting, the - branch repelling.
// At eta = 1 they are the node and saddle angles arccos(eps), -arccos(eps).
struct AngularCoefficients {
    double a, b, c;
};

AngularCoefficients angular_coefficients(double eta, double eps, const ModelParams& p);

struct Jacobian2 {
    double a11, a12, a21, a22;
};

// Linearization of rhs_tau at an equilibrium:
//   J(S-) = diag(1, -2 lambda/Z*)        J(N-) = diag(1, +2 lambda/Z*)
//   J(S+) = [[0,0],[c+, +2 sqrt(1-eps^2)]]
//   J(N+) = [[0,0],[c-, -2 sqrt(1-eps^2)]]
// with c± = ±2k sqrt(1-eps^2) + 2 A* eps - 2 gamma.
// S-/N- require gravity on (the flat-space linearization there is degenerate).
Jacobian2 jacobian(EquilibriumId which, double eps, const ModelParams& p);

// Tangent of the unstable manifold at S-: (1, -2 lambda/Z*), unnormalized.
std::array<double, 2> unstable_direction_s_minus(const ModelParams& p);

// Time variable of the compactified flow at radius r: tau = r + log r with
// gravity on (dr/dtau = eta), tau = r + 2 log r - 1/r in flat mode
// (dr/dtau = eta^2).
double tau_of_r(double r, bool flat);

} // namespace rwn::dynsys

#endif
