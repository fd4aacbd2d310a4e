#include "rwn/barriers.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "rwn/error.hpp"
#include "rwn/metric.hpp"

namespace rwn::barriers {

namespace {

constexpr double pi = std::numbers::pi;

struct GridResult {
    double min_margin = std::numeric_limits<double>::infinity();
    double arg_min = 0.0;
    long evaluations = 0;
};

// Minimum of the margin over a uniform grid on [lo, hi], augmented with
// log-spaced points near 0 when the interval starts there (the inequalities
// have structure at eta ~ Z*, invisible to any uniform grid), then refined
// 100x around the located minimum.
GridResult grid_minimum(const std::function<double(double)>& margin, double lo, double hi,
                        long n) {
    GridResult res;
    auto visit = [&](double x) {
        const double m = margin(x);
        ++res.evaluations;
        if (m < res.min_margin) {
            res.min_margin = m;
            res.arg_min = x;
        }
    };
    if (n < 2)
        n = 2;
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (long i = 0; i < n; ++i)
        visit(lo + step * i);
    if (lo == 0.0 && hi > 0.0) {
        const double x_lo = 1e-30;
        const int per_decade = 40;
        const double fac = std::pow(10.0, 1.0 / per_decade);
        for (double x = x_lo; x < hi; x *= fac)
            visit(x);
    }
    const double w_lo = std::max(lo, res.arg_min - step);
    const double w_hi = std::min(hi, res.arg_min + step);
    if (w_hi > w_lo) {
        for (long i = 0; i <= 200; ++i)
            visit(w_lo + (w_hi - w_lo) * i / 200.0);
    }
    return res;
}

BarrierReport make_report(std::string name, const std::function<double(double)>& margin,
                          double lo, double hi, long n, bool hypotheses_ok) {
    const auto g = grid_minimum(margin, lo, hi, n);
    BarrierReport rep;
    rep.name = std::move(name);
    rep.grid = g.evaluations;
    rep.min_margin = g.min_margin;
    rep.passed = std::isfinite(g.min_margin) && g.min_margin > 0.0;
    rep.hypotheses_ok = hypotheses_ok;
    rep.arg_min = g.arg_min;
    return rep;
}

} // namespace

BarrierReport check_upper_barrier(const ModelParams& p, long grid) {
    const double zs2 = p.z_star * p.z_star;
    const double c2 = (p.gamma * p.gamma - 2.0 * p.gamma) - (2.0 * p.a_star + zs2);
    const double c1 = 2.0 * p.gamma * (1.0 - p.gamma) + 2.0 * (p.a_star + zs2);
    auto margin = [&](double eta) { return -(c2 * eta * eta + c1 * eta - zs2); };
    const bool hyp = p.g_ratio > 0.0 && p.a_star < p.z_star;
    return make_report("upper-barrier", margin, 0.0, 1.0, grid, hyp);
}

std::array<double, 4> lower_barrier_coefficients(double z_star) {
    const double z = z_star;
    return {
        -9.0 * z * z * z + 3.0 * z * z - z + 8.0, // a3
        z * (27.0 * z * z - 6.0 * z + 1.0),       // a2
        3.0 * z * z * (1.0 - 9.0 * z),            // a1
        9.0 * z * z * z,                          // a0
    };
}

BarrierReport check_lower_barrier_neg_k(const ModelParams& p, long grid) {
    // Worst case of the proposition: k = -1, lambda = (3/2)Z*, A* = Z*/2.
    const double zs = p.z_star, zs2 = zs * zs;
    const double g2_a = 1.0 + zs + zs2;   // eta^2 coefficient of g^2 at A* = Z*/2
    const double g2_b = -(zs + 2.0 * zs2);
    auto margin = [&](double eta) {
        const double one = 1.0 - eta;
        const double g2 = g2_a * eta * eta + g2_b * eta + zs2;
        const double bracket = eta + 1.5 * zs * one;
        const double eta2 = eta * eta;
        return g2 * bracket * bracket - p.gamma * p.gamma * eta2 * eta2;
    };
    // The worst case k = -1 covers every k <= -1, so k itself is not part of
    // the hypotheses on the parameters.
    const bool hyp = p.gamma >= -1.0 && p.gamma < 0.0 && p.a_star <= 0.5 * p.z_star &&
                     p.lambda >= 1.5 * p.z_star && p.g_ratio > 0.0;
    return make_report("lower-barrier-neg-k", margin, 0.0, 1.0, grid, hyp);
}

std::pair<double, double> barrier_nodes(int k, const ModelParams& p, double delta) {
    if (k < 1)
        throw Error(ErrorCode::invalid_argument, "barrier_nodes: k must be >= 1");
    if (!(p.gamma > -1.0 / delta) || !(p.gamma < 0.0))
        throw Error(ErrorCode::domain,
                    "barrier_nodes: gamma must lie in (-1/delta, 0) for b_k in (0,1)");
    const double a = p.lambda / (k + p.lambda - delta * p.gamma);
    const double b = p.lambda / (k + p.lambda + delta * p.gamma);
    return {a, b};
}

BarrierReport check_horiz_barriers(int k, const ModelParams& p, long grid,
                                   const SlantedConstants& c) {
    const auto [a_k, b_k] = barrier_nodes(k, p, c.delta);
    // Inequalities with the positive factor 2(1-eta)/g removed, so the margin
    // does not degenerate at eta = 1.
    auto reduced_a = [&](double eta) {
        return p.lambda * (1.0 - eta) - k * eta + p.gamma * eta * eta / metric::g(eta, p);
    };
    auto reduced_b = [&](double eta) {
        return k * eta - p.lambda * (1.0 - eta) + p.gamma * eta * eta / metric::g(eta, p);
    };
    const double a_cal = std::sqrt(c.delta - 1.0) * p.z_star; // A with delta = 1 + (A/Z*)^2
    const bool hyp = p.g_ratio > 0.0 && p.a_star < a_cal && p.gamma > -1.0 / c.delta &&
                     p.gamma < 0.0;

    const auto ra = grid_minimum(reduced_a, 0.0, a_k, grid / 2);
    const auto rb = grid_minimum(reduced_b, b_k, 1.0, grid / 2);
    BarrierReport rep;
    rep.name = "horiz-barriers";
    rep.grid = ra.evaluations + rb.evaluations;
    if (ra.min_margin <= rb.min_margin) {
        rep.min_margin = ra.min_margin;
        rep.arg_min = ra.arg_min;
    } else {
        rep.min_margin = rb.min_margin;
        rep.arg_min = rb.arg_min;
    }
    rep.passed = std::isfinite(rep.min_margin) && rep.min_margin > 0.0;
    rep.hypotheses_ok = hyp;
    return rep;
}

BarrierReport check_slanted_barrier(int k, const ModelParams& p, long grid,
                                    const SlantedConstants& c) {
    const auto [a_k, b_k] = barrier_nodes(k, p, c.delta);
    const double slope_term = pi / (b_k - a_k);
    auto margin = [&](double eta) {
        const double g = metric::g(eta, p);
        const double one = 1.0 - eta;
        const double A = 2.0 * eta * eta / g;
        const double B = 2.0 / g * (k * eta * one - p.lambda * one * one);
        const double C = 2.0 * eta * eta / (g * g) * p.gamma * one + eta * one * one * slope_term;
        return std::min(C * C - A * A - B * B, A + C);
    };
    const double a_cal = std::sqrt(c.delta - 1.0) * p.z_star;
    const bool hyp = p.g_ratio > 0.0 && p.a_star < a_cal &&
                     p.gamma > -1.0 / (c.nu * c.delta) && p.gamma < 0.0 &&
                     p.lambda >= 1.5 * p.z_star && p.lambda <= c.lambda_cap(p.alpha);
    return make_report("slanted-barrier", margin, a_k, b_k, grid, hyp);
}

double slanted_proof_lhs(int k, double alpha, const SlantedConstants& c) {
    const double L = alpha / (2.0 * pi) / (c.nu * c.delta);
    const double d2 = c.delta * c.delta;
    const double t = L / (1.0 + L);
    return 4.0 * d2 * t * t + 4.0 * d2 * (4.0 / c.nu * k + 1.0 / (c.nu * c.nu));
}

double slanted_proof_rhs(int k, double alpha, const SlantedConstants& c) {
    const double L = alpha / (2.0 * pi) / (c.nu * c.delta);
    const double base = -2.0 / (c.nu * c.delta * c.delta) - pi / 2.0 + pi * c.nu / 2.0 * k;
    const double shrink = (c.nu - 1.0) / (c.nu + L - 1.0);
    return base * base * shrink * shrink;
}

BarrierReport check_eta0_barrier(const ModelParams& p, long grid) {
    const double eta0 = 0.0003;
    const double eta1 = 0.5 * (1.0 + eta0);
    const double rg = std::sqrt(p.g_ratio);
    const double alpha = p.alpha;
    auto omega0 = [&](double eta) { return -pi * (eta - eta0) / (1.0 - eta0); };
    auto j = [&](double eta) {
        const double one = 1.0 - eta;
        const double co = std::cos(omega0(eta));
        const double si = std::sin(omega0(eta));
        const double t1 = eta <= eta1 ? 2.02 * eta * co : 2.0 * eta * eta / (eta + rg) * co;
        const double t2 = 2.0 / (eta + rg) * eta * one * si;
        const double t3 = -2.02 / eta * (alpha / (2.0 * pi)) * one * one * si;
        const double t4 = -eta * eta / ((eta + rg) * (eta + rg)) * alpha * one;
        return t1 + t2 + t3 + t4 + pi / (1.0 - eta0) * eta * one * one;
    };
    auto margin = [&](double eta) { return -j(eta); };
    const double rg_lo = 0.5 * alpha * rg;
    const bool hyp = p.g_ratio > 0.0 && p.a_star < 0.1 * p.z_star && p.z_star >= rg_lo &&
                     p.z_star < rg && p.lambda >= 1.5 * p.z_star &&
                     p.lambda <= alpha / (2.0 * pi);
    return make_report("eta0-barrier", margin, eta0, 1.0, grid, hyp);
}

double eta0_crossing_bound(double alpha, double g_ratio) {
    const double a2 = alpha * alpha;
    const double num = -0.25 * a2 * (1.0 - g_ratio) + 0.5 * alpha * std::sqrt(1.0 - g_ratio);
    const double den = 1.0 + 0.1 * alpha * std::sqrt(g_ratio) - 0.25 * a2 * (1.0 - g_ratio);
    return num / den;
}

std::vector<BarrierReport> check_all(const ModelParams& p, int k_pos, long grid) {
    std::vector<BarrierReport> reports;
    reports.push_back(check_upper_barrier(p, grid));
    reports.push_back(check_lower_barrier_neg_k(p, grid));
    // b_k leaves (0,1) when gamma <= -1/delta; those checks then report failed
    // hypotheses with no grid run.
    auto guarded = [&](const char* name, auto&& check) {
        try {
            reports.push_back(check());
        } catch (const Error&) {
            BarrierReport rep;
            rep.name = name;
            rep.hypotheses_ok = false;
            rep.passed = false;
            rep.min_margin = std::numeric_limits<double>::quiet_NaN();
            reports.push_back(rep);
        }
    };
    guarded("horiz-barriers", [&] { return check_horiz_barriers(k_pos, p, grid); });
    guarded("slanted-barrier", [&] { return check_slanted_barrier(k_pos, p, grid); });
    reports.push_back(check_eta0_barrier(p, grid));
    return reports;
}

} // namespace rwn::barriers
