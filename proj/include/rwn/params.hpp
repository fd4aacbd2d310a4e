#ifndef RWN_PARAMS_HPP
#define RWN_PARAMS_HPP

#include <optional>

#include "rwn/constants.hpp"

namespace rwn {

// Physical configuration of a hydrogenic ion: nuclear charge Z (in units of e),
// mass number A, anomalous-moment coefficient a (in Bohr magnetons), and the
// gravity dial g_ratio. Z and A are real; sweeps treat Z as a continuous variable.
struct PhysicalInput {
    double z = 1.0;
    double a_mass = 0.0;
    double amm = constants::amm_coefficient_qed;
    double g_ratio = constants::g_ratio_physical;
    double mass_ratio = constants::mass_ratio_default;
    double alpha = constants::alpha_fs;
    // Validation-mode override: set lambda directly instead of (a/2) Z alpha.
    std::optional<double> lambda_override;
    int k = -1;
};

// Dimensionless parameters of the reduced problem.
//   z_star = sqrt(G) alpha Z     a_star = G alpha (m_p/m_e) A
//   gamma  = -Z alpha            lambda = (a/2) Z alpha
struct ModelParams {
    double z_star = 0.0;
    double a_star = 0.0;
    double gamma = 0.0;
    double lambda = 0.0;
    double g_ratio = 0.0;
    int k = -1;
    double alpha = constants::alpha_fs;

    bool naked = true;          // a_star < z_star whenever gravity is on
    bool self_adjoint = true;   // lambda >= (3/2) z_star (or gravity off)

    bool flat() const { return g_ratio == 0.0; }
    double z() const { return -gamma / alpha; }
    ModelParams with_k(int kk) const {
        ModelParams q = *this;
        q.k = kk;
        return q;
    }
};

// Rejects the non-naked regime (a_star >= z_star with gravity on); a
// sub-threshold lambda only clears the self_adjoint flag, since flat-space
// validation runs legitimately use small lambda.
ModelParams derive_params(const PhysicalInput& input);

// (3/2) z_star / lambda; ~1.27e-18 for physical inputs.
double self_adjointness_margin(const ModelParams& p);

} // namespace rwn

#endif
