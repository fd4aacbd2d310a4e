#include "rwn/dynsys.hpp"

#include <cmath>

#include "rwn/error.hpp"
#include "rwn/metric.hpp"

namespace rwn::dynsys {

Equilibria equilibria(double eps) {
    if (std::abs(eps) > 1.0)
        throw Error(ErrorCode::domain, "equilibria: |eps| must be <= 1");
    const double ac = std::acos(eps);
    return Equilibria{
        .s_minus = {0.0, 0.0},
        .n_minus = {0.0, -std::numbers::pi},
        .s_plus = {1.0, -ac},
        .n_plus = {1.0, ac},
    };
}

double omega_prime_r(double r, double omega, double eps, const ModelParams& p) {
    const double f = metric::f(r, p);
    const double c = std::cos(omega), s = std::sin(omega);
    return 2.0 / f * c + 2.0 / f * (p.k / r - p.lambda / (r * r)) * s +
           2.0 / (f * f) * (p.gamma / r - eps);
}

double amplitude_log_derivative_r(double r, double omega, const ModelParams& p) {
    const double f = metric::f(r, p);
    return std::sin(omega) / f + (-p.k / r + p.lambda / (r * r)) * std::cos(omega) / f;
}

std::array<double, 2> rhs_tau_raw(double eta, double omega, double eps, const ModelParams& p) {
    const double one = 1.0 - eta;
    const double c = std::cos(omega), s = std::sin(omega);
    if (p.flat()) {
        const double deta = eta * eta * one * one;
        const double domega = 2.0 * eta * eta * c +
                              2.0 * (p.k * eta * one - p.lambda * one * one) * s +
                              2.0 * eta * (p.gamma * one - eps * eta);
        return {deta, domega};
    }
    const double zs2 = p.z_star * p.z_star;
    const double g2 = (1.0 + 2.0 * p.a_star + zs2) * eta * eta -
                      2.0 * (p.a_star + zs2) * eta + zs2;
    const double g = std::sqrt(g2);
    const double deta = eta * one * one;
    const double domega = 2.0 * eta * eta / g * c +
                          2.0 / g * (p.k * eta * one - p.lambda * one * one) * s +
                          2.0 * eta * eta / g2 * (p.gamma * one - eps * eta);
    return {deta, domega};
}

std::array<double, 2> rhs_tau(const CylinderState& st, double eps, const ModelParams& p) {
    if (st.eta < 0.0 || st.eta > 1.0)
        throw Error(ErrorCode::domain, "rhs_tau: eta must lie in [0,1]");
    return rhs_tau_raw(st.eta, st.omega_lift, eps, p);
}

double domega_deps(const CylinderState& st, const ModelParams& p) {
    const double eta = st.eta;
    if (p.flat())
        return -2.0 * eta * eta;
    const double g = metric::g(eta, p);
    return -2.0 * eta * eta * eta / (g * g);
}

AngularCoefficients angular_coefficients(double eta, double eps, const ModelParams& p) {
    const double one = 1.0 - eta;
    if (p.flat()) {
        return {2.0 * eta * eta, 2.0 * (p.k * eta * one - p.lambda * one * one),
                2.0 * eta * (p.gamma * one - eps * eta)};
    }
    const double g = metric::g(eta, p);
    return {2.0 * eta * eta / g, 2.0 / g * (p.k * eta * one - p.lambda * one * one),
            2.0 * eta * eta / (g * g) * (p.gamma * one - eps * eta)};
}

Jacobian2 jacobian(EquilibriumId which, double eps, const ModelParams& p) {
    if (std::abs(eps) > 1.0)
        throw Error(ErrorCode::domain, "jacobian: |eps| must be <= 1");
    switch (which) {
        case EquilibriumId::s_minus:
        case EquilibriumId::n_minus: {
            if (p.flat())
                throw Error(ErrorCode::domain,
                            "jacobian: S-/N- linearization is degenerate in flat mode");
            const double rate = 2.0 * p.lambda / p.z_star;
            return which == EquilibriumId::s_minus ? Jacobian2{1.0, 0.0, 0.0, -rate}
                                                   : Jacobian2{1.0, 0.0, 0.0, rate};
        }
        case EquilibriumId::s_plus:
        case EquilibriumId::n_plus: {
            const double root = std::sqrt(std::max(0.0, 1.0 - eps * eps));
            const double sgn = which == EquilibriumId::s_plus ? 1.0 : -1.0;
            const double c = 2.0 * sgn * p.k * root + 2.0 * p.a_star * eps - 2.0 * p.gamma;
            return Jacobian2{0.0, 0.0, c, 2.0 * sgn * root};
        }
    }
    throw Error(ErrorCode::internal, "jacobian: bad equilibrium id");
}

std::array<double, 2> unstable_direction_s_minus(const ModelParams& p) {
    if (!(p.z_star > 0.0))
        throw Error(ErrorCode::domain, "unstable_direction_s_minus: needs z_star > 0");
    return {1.0, -2.0 * p.lambda / p.z_star};
}

double tau_of_r(double r, bool flat) {
    if (!(r > 0.0))
        throw Error(ErrorCode::domain, "tau_of_r: r must be positive");
    return flat ? r + 2.0 * std::log(r) - 1.0 / r : r + std::log(r);
}

} // namespace rwn::dynsys
