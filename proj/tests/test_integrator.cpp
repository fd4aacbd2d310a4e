#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "rwn/error.hpp"
#include "rwn/integrator.hpp"

using namespace rwn;
using State1 = std::array<double, 1>;

namespace {

void exp_field(double, const State1& y, State1& d) { d[0] = y[0]; }

// y' = -2 t y^2, y(0) = 1, exact y = 1/(1+t^2)
void rational_field(double t, const State1& y, State1& d) { d[0] = -2.0 * t * y[0] * y[0]; }

double exp_error(const ode::IntegratorConfig& cfg) {
    const auto tr = ode::integrate<1>(exp_field, {1.0}, 0.0, 1.0, cfg);
    return std::abs(tr.y_end()[0] - std::exp(1.0));
}

double rational_error(const ode::IntegratorConfig& cfg) {
    const auto tr = ode::integrate<1>(rational_field, {1.0}, 0.0, 1.0, cfg);
    return std::abs(tr.y_end()[0] - 0.5);
}

double fitted_order(double (*err)(const ode::IntegratorConfig&)) {
    const std::vector<double> hs = {1.0 / 2, 1.0 / 3, 1.0 / 4, 1.0 / 6};
    double sxx = 0, sxy = 0, sx = 0, sy = 0;
    for (double h : hs) {
        ode::IntegratorConfig cfg;
        cfg.fixed_step = h;
        const double x = std::log(h), y = std::log(err(cfg));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = hs.size();
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

TEST_CASE("closed-form problems at default tolerances") {
    ode::IntegratorConfig cfg;
    CHECK(exp_error(cfg) / std::exp(1.0) < 1e-9);
    CHECK(rational_error(cfg) / 0.5 < 1e-9);
}

TEST_CASE("fixed-step convergence order is at least 7") {
    CHECK(fitted_order(exp_error) >= 7.0);
    CHECK(fitted_order(rational_error) >= 7.0);
}

TEST_CASE("tightening tolerances tightens the error") {
    // With few steps the signed local errors partially cancel, so one halving
    // can raise the global error by a step-quantization factor (measured up to
    // ~1.7x); the envelope over three halvings is strictly monotone.
    for (auto err : {exp_error, rational_error}) {
        ode::IntegratorConfig cfg;
        cfg.abs_tol = 1e-4;
        cfg.rel_tol = 1e-4;
        std::vector<double> errs;
        for (int i = 0; i < 16; ++i) {
            errs.push_back(err(cfg));
            cfg.abs_tol *= 0.5;
            cfg.rel_tol *= 0.5;
        }
        for (std::size_t i = 1; i < errs.size(); ++i)
            CHECK(errs[i] <= 2.0 * errs[i - 1]);
        for (std::size_t i = 3; i < errs.size(); ++i)
            CHECK(errs[i] < errs[i - 3]);
    }
}

TEST_CASE("determinism: identical inputs, identical trajectories") {
    ode::IntegratorConfig cfg;
    const auto a = ode::integrate<1>(rational_field, {1.0}, 0.0, 1.0, cfg);
    const auto b = ode::integrate<1>(rational_field, {1.0}, 0.0, 1.0, cfg);
    REQUIRE(a.t.size() == b.t.size());
    for (std::size_t i = 0; i < a.t.size(); ++i) {
        CHECK(a.t[i] == b.t[i]);
        CHECK(a.y[i][0] == b.y[i][0]);
    }
}

TEST_CASE("event detection locates the crossing") {
    auto field = [](double, const State1&, State1& d) { d[0] = 2.0; };
    auto event = [](double, const State1& y) { return y[0] - 5.0; };
    ode::IntegratorConfig cfg;
    const auto tr = ode::integrate<1>(field, {0.0}, 0.0, 100.0, cfg, event);
    CHECK(tr.status == ode::TrajectoryStatus::event_hit);
    CHECK(tr.y_end()[0] == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(tr.t_end() == doctest::Approx(2.5).epsilon(1e-10));

    // already past the event at t0
    const auto tr2 = ode::integrate<1>(field, {7.0}, 0.0, 100.0, cfg, event);
    CHECK(tr2.status == ode::TrajectoryStatus::event_hit);
    CHECK(tr2.t_end() == 0.0);
}

TEST_CASE("step limit is reported through the status") {
    ode::IntegratorConfig cfg;
    cfg.max_steps = 3;
    const auto tr = ode::integrate<1>(exp_field, {1.0}, 0.0, 50.0, cfg);
    CHECK(tr.status == ode::TrajectoryStatus::step_limit);
}

TEST_CASE("step-size underflow throws with a location") {
    ode::IntegratorConfig cfg;
    cfg.fixed_step = 1e-30;
    CHECK_THROWS_AS(ode::integrate<1>(exp_field, {1.0}, 1.0, 2.0, cfg), Error);
    try {
        ode::integrate<1>(exp_field, {1.0}, 1.0, 2.0, cfg);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::step_underflow);
        CHECK(std::string(e.what()).find("t = ") != std::string::npos);
    }
}

TEST_CASE("argument validation") {
    ode::IntegratorConfig cfg;
    CHECK_THROWS_AS(ode::integrate<1>(exp_field, {1.0}, 1.0, 0.5, cfg), Error);
    cfg.abs_tol = 0.0;
    CHECK_THROWS_AS(ode::integrate<1>(exp_field, {1.0}, 0.0, 1.0, cfg), Error);
}
