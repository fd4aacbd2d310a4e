#include "rwn/metric.hpp"

#include <cmath>

#include "rwn/error.hpp"

namespace rwn::metric {

double f(double r, const ModelParams& p) {
    if (!(r > 0.0))
        throw Error(ErrorCode::domain, "metric f: r must be positive");
    if (p.flat())
        return 1.0;
    return std::sqrt(1.0 - 2.0 * p.a_star / r + (p.z_star / r) * (p.z_star / r));
}

double g(double eta, const ModelParams& p) {
    if (eta < 0.0 || eta > 1.0)
        throw Error(ErrorCode::domain, "metric g: eta must lie in [0,1]");
    if (p.flat())
        return eta;
    const double zs2 = p.z_star * p.z_star;
    return std::sqrt((1.0 + 2.0 * p.a_star + zs2) * eta * eta -
                     2.0 * (p.a_star + zs2) * eta + zs2);
}

double eta_of_r(double r) {
    if (!(r > 0.0))
        throw Error(ErrorCode::domain, "eta_of_r: r must be positive");
    return r / (1.0 + r);
}

double r_of_eta(double eta) {
    if (!(eta > 0.0) || eta >= 1.0)
        throw Error(ErrorCode::domain, "r_of_eta: eta must lie in (0,1)");
    return eta / (1.0 - eta);
}

} // namespace rwn::metric
