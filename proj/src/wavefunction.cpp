#include "rwn/wavefunction.hpp"

#include <cmath>

#include "rwn/dynsys.hpp"
#include "rwn/error.hpp"
#include "rwn/integrator.hpp"
#include "rwn/metric.hpp"

namespace rwn::wavefunction {

RadialSolution reconstruct(const ModelParams& p, double eps, const ReconstructOptions& opts) {
    if (!(eps > -1.0) || !(eps < 1.0))
        throw Error(ErrorCode::domain, "reconstruct: eps must lie in (-1,1)");
    if (!(opts.r0 > 0.0) || !(opts.r_max > opts.r0) || opts.samples_per_decade < 10)
        throw Error(ErrorCode::invalid_argument, "reconstruct: bad radial grid");
    if (!(opts.r_ref >= opts.r0) || !(opts.r_ref <= opts.r_max))
        throw Error(ErrorCode::invalid_argument, "reconstruct: r_ref outside sampled range");

    const double x0 = std::log(opts.r0);
    const double x1 = std::log(opts.r_max);
    const double h = std::numbers::ln10 / opts.samples_per_decade;
    const long n_steps = std::lround(std::ceil((x1 - x0) / h));

    // State (Omega, log R) in x = log r; the angle equation carries a factor
    // r, which absorbs the 1/r^2 stiffness of the anomalous-moment term.
    auto field = [&p, eps](double x, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        const double r = std::exp(x);
        dy[0] = r * dynsys::omega_prime_r(r, y[0], eps, p);
        dy[1] = r * dynsys::amplitude_log_derivative_r(r, y[0], p);
    };

    ode::IntegratorConfig cfg;
    cfg.fixed_step = h;
    cfg.max_steps = 4 * n_steps + 16;
    auto traj = ode::integrate<2>(field, {0.0, 0.0}, x0, x0 + n_steps * h, cfg);
    // A rounding-induced trailing sliver would break the uniform grid.
    while (traj.t.size() >= 2 &&
           traj.t.back() - traj.t[traj.t.size() - 2] < 0.5 * h) {
        traj.t.pop_back();
        traj.y.pop_back();
    }

    RadialSolution sol;
    sol.eps = eps;
    sol.params = p;
    const std::size_t m = traj.t.size();
    sol.r.resize(m);
    sol.u.resize(m);
    sol.v.resize(m);
    sol.R.resize(m);
    sol.omega.resize(m);

    // Gauge shift: cubic Hermite value of log R at x_ref = log(r_ref).
    const double x_ref = std::log(opts.r_ref);
    double gauge = 0.0;
    {
        std::size_t i = std::min<std::size_t>(
            m - 2, static_cast<std::size_t>(std::max(0.0, std::floor((x_ref - x0) / h))));
        const double s = (x_ref - traj.t[i]) / h;
        std::array<double, 2> da{}, db{};
        field(traj.t[i], traj.y[i], da);
        field(traj.t[i + 1], traj.y[i + 1], db);
        const double ya = traj.y[i][1], yb = traj.y[i + 1][1];
        const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
        const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
        gauge = h00 * ya + h10 * h * da[1] + h01 * yb + h11 * h * db[1];
    }

    for (std::size_t i = 0; i < m; ++i) {
        sol.r[i] = std::exp(traj.t[i]);
        sol.omega[i] = traj.y[i][0];
        sol.R[i] = std::exp(traj.y[i][1] - gauge);
        sol.u[i] = sol.R[i] * std::cos(0.5 * sol.omega[i]);
        sol.v[i] = sol.R[i] * std::sin(0.5 * sol.omega[i]);
    }

    if (opts.require_connector) {
        std::array<double, 2> d{};
        field(traj.t[m - 1], traj.y[m - 1], d);
        if (d[1] >= 0.0)
            throw Error(ErrorCode::non_connector,
                        "reconstruct: amplitude not decaying at r_max; orbit ends at a node");
    }

    // Weighted L2 norm, trapezoid in x with dr = r dx.
    double acc = 0.0;
    auto weight = [&](std::size_t i) {
        const double f = metric::f(sol.r[i], p);
        return sol.R[i] * sol.R[i] / (f * f) * sol.r[i];
    };
    for (std::size_t i = 0; i + 1 < m; ++i)
        acc += 0.5 * (weight(i) + weight(i + 1)) * (traj.t[i + 1] - traj.t[i]);
    sol.norm = std::sqrt(acc);
    return sol;
}

SmallRExponent small_r_exponent(const ModelParams& p) {
    if (p.z_star > 0.0)
        return {p.lambda / p.z_star, SmallRKind::power_law};
    return {p.lambda, SmallRKind::essential_singularity};
}

namespace {

// Least squares y ~ sum_j c_j phi_j with tiny fixed basis sizes.
template <std::size_t K>
std::array<double, K> lstsq(const std::vector<std::array<double, K>>& phi,
                            const std::vector<double>& y) {
    std::array<std::array<double, K + 1>, K> a{};
    for (std::size_t s = 0; s < phi.size(); ++s) {
        for (std::size_t i = 0; i < K; ++i) {
            for (std::size_t j = 0; j < K; ++j)
                a[i][j] += phi[s][i] * phi[s][j];
            a[i][K] += phi[s][i] * y[s];
        }
    }
    for (std::size_t col = 0; col < K; ++col) { // Gaussian elimination, partial pivot
        std::size_t piv = col;
        for (std::size_t row = col + 1; row < K; ++row)
            if (std::abs(a[row][col]) > std::abs(a[piv][col]))
                piv = row;
        std::swap(a[col], a[piv]);
        if (a[col][col] == 0.0)
            throw Error(ErrorCode::internal, "singular least-squares system");
        for (std::size_t row = 0; row < K; ++row) {
            if (row == col)
                continue;
            const double fac = a[row][col] / a[col][col];
            for (std::size_t j = col; j <= K; ++j)
                a[row][j] -= fac * a[col][j];
        }
    }
    std::array<double, K> c{};
    for (std::size_t i = 0; i < K; ++i)
        c[i] = a[i][K] / a[i][i];
    return c;
}

} // namespace

double fit_small_r_exponent(const RadialSolution& sol) {
    const auto& p = sol.params;
    if (p.z_star > 0.0 && p.lambda / p.z_star > 1e3)
        throw Error(ErrorCode::domain,
                    "fit_small_r_exponent: lambda/Z* too large for a resolvable power law");
    if (sol.r.size() < 10)
        throw Error(ErrorCode::domain, "fit_small_r_exponent: insufficient samples");
    const double r_hi = 10.0 * sol.r.front();
    std::vector<std::array<double, 2>> phi;
    std::vector<double> y;
    for (std::size_t i = 0; i < sol.r.size() && sol.r[i] <= r_hi; ++i) {
        phi.push_back({1.0, std::log(sol.r[i])});
        y.push_back(std::log(sol.R[i]));
    }
    if (phi.size() < 10)
        throw Error(ErrorCode::domain, "fit_small_r_exponent: insufficient samples in fit window");
    return lstsq<2>(phi, y)[1];
}

double fit_far_field_rate(const RadialSolution& sol, double r_lo, double r_hi) {
    std::vector<std::array<double, 3>> phi;
    std::vector<double> y;
    for (std::size_t i = 0; i < sol.r.size(); ++i) {
        if (sol.r[i] < r_lo || sol.r[i] > r_hi)
            continue;
        phi.push_back({1.0, sol.r[i], std::log(sol.r[i])});
        y.push_back(std::log(sol.R[i]));
    }
    if (phi.size() < 10)
        throw Error(ErrorCode::domain, "fit_far_field_rate: insufficient samples in fit window");
    return lstsq<3>(phi, y)[1];
}

double coupled_system_residual(const RadialSolution& sol) {
    const auto& p = sol.params;
    const std::size_t m = sol.r.size();
    if (m < 8)
        throw Error(ErrorCode::domain, "coupled_system_residual: insufficient samples");
    const double h = std::log(sol.r[1] / sol.r[0]);
    static constexpr double w[3] = {3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0};

    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        scale = std::max({scale, std::abs(sol.u[i]), std::abs(sol.v[i])});

    double worst = 0.0;
    for (std::size_t i = 3; i + 3 < m; ++i) {
        auto ddx = [&](const std::vector<double>& q) {
            double d = 0.0;
            for (int j = 1; j <= 3; ++j)
                d += w[j - 1] * (q[i + j] - q[i - j]);
            return d / h;
        };
        const double r = sol.r[i];
        const double f = metric::f(r, p);
        const double ku = (p.k / r - p.lambda / (r * r)) / f;
        const double up = ddx(sol.u) / r;
        const double vp = ddx(sol.v) / r;
        const double res_u = up + ku * sol.u[i] - (f - p.gamma / r + sol.eps) / (f * f) * sol.v[i];
        const double res_v = vp - ku * sol.v[i] - (f + p.gamma / r - sol.eps) / (f * f) * sol.u[i];
        worst = std::max({worst, std::abs(res_u), std::abs(res_v)});
    }
    return worst / scale;
}

} // namespace rwn::wavefunction
