#ifndef RWN_CONSTANTS_HPP
#define RWN_CONSTANTS_HPP

#include <numbers>

namespace rwn::constants {

// Sommerfeld fine structure constant.
inline constexpr double alpha_fs = 1.0 / 137.036;

// Ratio of gravitational to electrical coupling, G m_e^2 / e^2.
inline constexpr double g_ratio_physical = 2.40e-43;

// Proton to electron mass ratio.
inline constexpr double mass_ratio_default = 1836.0;

// First-order QED value of the anomalous-moment coefficient, a = alpha/2pi.
inline constexpr double amm_coefficient_qed = alpha_fs / (2.0 * std::numbers::pi);

// Below this value of the gravity dial, computed spectra at the default r0
// are numerically indistinguishable from flat space.
inline constexpr double g_ratio_resolution = 1e-10;

// Radius below which the metric factor departs from 1 at Z = 1,
// r_res = alpha * sqrt(G).
inline double r_resolution(double g_ratio, double alpha = alpha_fs);

} // namespace rwn::constants

#endif
