#include "rwn/params.hpp"

#include <cmath>
#include <sstream>

#include "rwn/error.hpp"

namespace rwn {

namespace constants {
double r_resolution(double g_ratio, double alpha) { return alpha * std::sqrt(g_ratio); }
} // namespace constants

ModelParams derive_params(const PhysicalInput& input) {
    if (!(input.z > 0.0))
        throw Error(ErrorCode::invalid_argument, "Z must be positive");
    if (input.a_mass < 0.0 || input.amm < 0.0 || input.g_ratio < 0.0)
        throw Error(ErrorCode::invalid_argument, "A, a and g_ratio must be non-negative");
    if (!(input.mass_ratio > 0.0) || !(input.alpha > 0.0))
        throw Error(ErrorCode::invalid_argument, "mass_ratio and alpha must be positive");
    if (input.k == 0)
        throw Error(ErrorCode::invalid_argument, "k must be a nonzero integer");

    ModelParams p;
    p.g_ratio = input.g_ratio;
    p.alpha = input.alpha;
    p.k = input.k;
    p.z_star = std::sqrt(input.g_ratio) * input.alpha * input.z;
    p.a_star = input.g_ratio * input.alpha * input.mass_ratio * input.a_mass;
    p.gamma = -input.z * input.alpha;
    p.lambda = input.lambda_override ? *input.lambda_override
                                     : 0.5 * input.amm * input.z * input.alpha;
    if (p.lambda < 0.0)
        throw Error(ErrorCode::invalid_argument, "lambda must be non-negative");

    if (p.g_ratio > 0.0 && p.a_star >= p.z_star) {
        std::ostringstream os;
        os << "non-naked regime: a_star = " << p.a_star << " >= z_star = " << p.z_star;
        throw Error(ErrorCode::not_naked, os.str());
    }
    p.naked = true;
    p.self_adjoint = p.g_ratio == 0.0 || p.lambda >= 1.5 * p.z_star;
    return p;
}

double self_adjointness_margin(const ModelParams& p) {
    if (!(p.lambda > 0.0))
        throw Error(ErrorCode::invalid_argument, "self-adjointness margin needs lambda > 0");
    return 1.5 * p.z_star / p.lambda;
}

} // namespace rwn
