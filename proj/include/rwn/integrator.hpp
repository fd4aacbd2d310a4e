#ifndef RWN_INTEGRATOR_HPP
#define RWN_INTEGRATOR_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <type_traits>
#include <vector>

#include <boost/numeric/odeint/stepper/runge_kutta_fehlberg78.hpp>

#include "rwn/error.hpp"

namespace rwn::ode {

struct IntegratorConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    long max_steps = 10'000'000;
    double initial_step = 0.0; // 0 = automatic
    double fixed_step = 0.0;   // > 0 disables error control and steps at this size
};

enum class TrajectoryStatus { completed, event_hit, step_limit };

template <std::size_t N>
struct Trajectory {
    std::vector<double> t;
    std::vector<std::array<double, N>> y;
    TrajectoryStatus status = TrajectoryStatus::completed;
    long steps_accepted = 0;
    long steps_rejected = 0;

    double t_end() const { return t.back(); }
    const std::array<double, N>& y_end() const { return y.back(); }
};

namespace detail {

// Error estimate of the Fehlberg 7(8) pair is O(h^8).
inline constexpr double step_exponent = 8.0;

template <std::size_t N>
double error_norm(const std::array<double, N>& err, const std::array<double, N>& y_old,
                  const std::array<double, N>& y_new, double abs_tol, double rel_tol) {
    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double sc = abs_tol + rel_tol * std::max(std::abs(y_old[i]), std::abs(y_new[i]));
        const double q = err[i] / sc;
        sum += q * q;
    }
    return std::sqrt(sum / static_cast<double>(N));
}

template <std::size_t N, class Sys>
double initial_step(Sys& sys, const std::array<double, N>& y0, double t0, double span,
                    double abs_tol, double rel_tol) {
    std::array<double, N> f0{}, y1{}, f1{};
    sys(y0, f0, t0);
    double d0 = 0.0, d1 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double sc = abs_tol + rel_tol * std::abs(y0[i]);
        d0 += (y0[i] / sc) * (y0[i] / sc);
        d1 += (f0[i] / sc) * (f0[i] / sc);
    }
    d0 = std::sqrt(d0 / N);
    d1 = std::sqrt(d1 / N);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, span);
    for (std::size_t i = 0; i < N; ++i)
        y1[i] = y0[i] + h0 * f0[i];
    sys(y1, f1, t0 + h0);
    double d2 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double sc = abs_tol + rel_tol * std::abs(y0[i]);
        const double q = (f1[i] - f0[i]) / sc;
        d2 += q * q;
    }
    d2 = std::sqrt(d2 / N) / h0;
    const double dm = std::max(d1, d2);
    const double h1 = dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3)
                                  : std::pow(0.01 / dm, 1.0 / step_exponent);
    return std::min({100.0 * h0, h1, span});
}

} // namespace detail

// Adaptive explicit RK with an embedded Fehlberg 7(8) pair, PI step-size
// control, and event detection. The event, when supplied, is a scalar
// function of (t, y); integration stops at its first sign change (negative
// to non-negative), with the crossing located by bisection over a single
// stage-restart step (60 iterations max). Throws on step-size underflow;
// exceeding max_steps is reported through the trajectory status.
template <std::size_t N, class Field, class Event = std::nullptr_t>
Trajectory<N> integrate(Field&& field, std::array<double, N> y0, double t0, double t_end,
                        const IntegratorConfig& cfg, Event&& event = nullptr) {
    if (!(t_end > t0))
        throw Error(ErrorCode::invalid_argument, "integrate: t_end must exceed t0");
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw Error(ErrorCode::invalid_argument, "integrate: tolerances must be positive");

    constexpr bool have_event = !std::is_same_v<std::decay_t<Event>, std::nullptr_t>;

    boost::numeric::odeint::runge_kutta_fehlberg78<std::array<double, N>> stepper;
    auto sys = [&field](const std::array<double, N>& y, std::array<double, N>& dydt, double t) {
        field(t, y, dydt);
    };

    Trajectory<N> traj;
    traj.t.push_back(t0);
    traj.y.push_back(y0);

    double e_prev = 0.0;
    if constexpr (have_event) {
        e_prev = event(t0, y0);
        if (e_prev >= 0.0) {
            traj.status = TrajectoryStatus::event_hit;
            return traj;
        }
    }

    const bool fixed = cfg.fixed_step > 0.0;
    double t = t0;
    double h = fixed ? cfg.fixed_step
                     : (cfg.initial_step > 0.0
                            ? cfg.initial_step
                            : detail::initial_step(sys, y0, t0, t_end - t0, cfg.abs_tol, cfg.rel_tol));
    std::array<double, N> y = y0, y_new{}, err{};
    double err_old = 1e-4;
    bool just_rejected = false;

    const double t_scale = std::max({1.0, std::abs(t0), std::abs(t_end)});
    while (t_end - t > 16.0 * std::numeric_limits<double>::epsilon() * t_scale) {
        if (traj.steps_accepted + traj.steps_rejected >= cfg.max_steps) {
            traj.status = TrajectoryStatus::step_limit;
            return traj;
        }
        double h_try = std::min(h, t_end - t);
        if (h_try < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
            std::ostringstream os;
            os << "integrate: step size underflow at t = " << t;
            throw Error(ErrorCode::step_underflow, os.str());
        }

        stepper.do_step(sys, y, t, y_new, h_try, err);

        if (!fixed) {
            const double en = detail::error_norm(err, y, y_new, cfg.abs_tol, cfg.rel_tol);
            if (en > 1.0) {
                ++traj.steps_rejected;
                h = h_try * std::max(0.2, 0.9 * std::pow(en, -1.0 / detail::step_exponent));
                just_rejected = true;
                continue;
            }
            double fac = 0.9 * std::pow(std::max(en, 1e-16), -0.7 / detail::step_exponent) *
                         std::pow(err_old, 0.4 / detail::step_exponent);
            fac = std::min(just_rejected ? 1.0 : 5.0, std::max(0.2, fac));
            err_old = std::max(en, 1e-16);
            h = h_try * fac;
            just_rejected = false;
        }

        const double t_new = t + h_try;
        ++traj.steps_accepted;

        if constexpr (have_event) {
            const double e_new = event(t_new, y_new);
            if (e_prev < 0.0 && e_new >= 0.0) {
                // Locate the crossing inside [t, t + h_try] by bisecting the
                // sub-step length; each probe is one full-accuracy RK step
                // from the accepted left state.
                double lo = 0.0, hi = 1.0;
                std::array<double, N> y_hi = y_new, y_probe{}, e_unused{};
                double e_hi = e_new;
                for (int it = 0; it < 60 && std::abs(e_hi) > cfg.abs_tol; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    stepper.do_step(sys, y, t, y_probe, mid * h_try, e_unused);
                    const double e_mid = event(t + mid * h_try, y_probe);
                    if (e_mid >= 0.0) {
                        hi = mid;
                        y_hi = y_probe;
                        e_hi = e_mid;
                    } else {
                        lo = mid;
                    }
                }
                traj.t.push_back(t + hi * h_try);
                traj.y.push_back(y_hi);
                traj.status = TrajectoryStatus::event_hit;
                return traj;
            }
            e_prev = e_new;
        }

        t = t_new;
        y = y_new;
        traj.t.push_back(t);
        traj.y.push_back(y);
    }
    traj.status = TrajectoryStatus::completed;
    return traj;
}

} // namespace rwn::ode

#endif
