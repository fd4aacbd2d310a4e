#ifndef RWN_WAVEFUNCTION_HPP
#define RWN_WAVEFUNCTION_HPP

#include <vector>

#include "rwn/params.hpp"

namespace rwn::wavefunction {

// Radial spinor along an orbit, sampled on a uniform log-r grid:
//   u = R cos(Omega/2), v = R sin(Omega/2),
// R from quadrature of the amplitude log-derivative with R(r_ref) = 1,
// norm = sqrt(int f^-2 R^2 dr) over the sampled range.
struct RadialSolution {
    std::vector<double> r, u, v, R, omega;
    double eps = 0.0;
    double norm = 0.0;
    ModelParams params;
};

struct ReconstructOptions {
    double r0 = 1e-6;
    double r_max = 1000.0;
    double r_ref = 1.0;
    int samples_per_decade = 600;
    // Node-ending orbits grow exponentially and are rejected unless this is
    // cleared (the norm-growth dichotomy check needs them).
    bool require_connector = true;
};

RadialSolution reconstruct(const ModelParams& p, double eps, const ReconstructOptions& opts);

enum class SmallRKind { power_law, essential_singularity };

// Vanishing rate of R as r -> 0: R ~ r^(lambda/Z*) with gravity on; in flat
// space the power law degenerates to the essential singularity exp(-lambda/r)
// and the returned value is its rate lambda.
struct SmallRExponent {
    double value = 0.0;
    SmallRKind kind = SmallRKind::power_law;
};

SmallRExponent small_r_exponent(const ModelParams& p);

// Least-squares slope of log R against log r over the smallest sampled decade.
// Refused when lambda/Z* > 1e3: the physical exponent (~1.17e18) lives below
// any resolvable radius, so a fit is only meaningful in artificial-G mode.
double fit_small_r_exponent(const RadialSolution& sol);

// Linear decay rate b from the far-field model log R ~ c + b r + q log r over
// samples with r in [r_lo, r_hi]; b -> -sqrt(1-eps^2) for connectors.
double fit_far_field_rate(const RadialSolution& sol, double r_lo, double r_hi);

// Sup-norm residual of the reconstruction in the coupled first-order system
// (derivatives estimated by sixth-order central differences on the log grid),
// relative to max |u|, |v|.
double coupled_system_residual(const RadialSolution& sol);

} // namespace rwn::wavefunction

#endif
