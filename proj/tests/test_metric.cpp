#include <doctest.h>

#include <cmath>
#include <vector>

#include "rwn/error.hpp"
#include "rwn/metric.hpp"

using namespace rwn;

namespace {

ModelParams artificial(double z_star, double a_star) {
    ModelParams p;
    p.z_star = z_star;
    p.a_star = a_star;
    p.g_ratio = 1e-6;
    p.gamma = -z_star / std::sqrt(p.g_ratio);
    p.lambda = 1.5 * z_star;
    return p;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
    std::vector<double> g;
    const double fac = std::pow(10.0, 1.0 / per_decade);
    for (double x = lo; x <= hi; x *= fac)
        g.push_back(x);
    return g;
}

} // namespace

TEST_CASE("f: flat limit and direct values") {
    ModelParams flat;
    CHECK(metric::f(0.37, flat) == 1.0);
    CHECK(metric::f(1e-20, flat) == 1.0);

    const auto p = artificial(0.5, 0.1);
    CHECK(metric::f(1.0, p) == doctest::Approx(std::sqrt(1.05)).epsilon(1e-12));
    CHECK(metric::f(1.0, p) == doctest::Approx(1.024695).epsilon(1e-6));
    CHECK_THROWS_AS(metric::f(0.0, p), Error);
    CHECK_THROWS_AS(metric::f(-1.0, p), Error);
}

TEST_CASE("f approaches 1 as r grows") {
    const auto p = artificial(0.5, 0.1);
    // |f - 1| <= C/r with C ~ A* + Z*^2
    for (double r : {10.0, 100.0, 1e4, 1e8})
        CHECK(std::abs(metric::f(r, p) - 1.0) <= 1.0 / r);
}

TEST_CASE("g: endpoint values and direct evaluation") {
    const auto p = artificial(0.5, 0.1);
    CHECK(metric::g(1.0, p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(metric::g(0.0, p) == p.z_star);
    CHECK(metric::g(0.5, p) == doctest::Approx(std::sqrt(0.2625)).epsilon(1e-12));
    CHECK(metric::g(0.5, p) == doctest::Approx(0.512348).epsilon(1e-6));
    CHECK_THROWS_AS(metric::g(-0.1, p), Error);
    CHECK_THROWS_AS(metric::g(1.1, p), Error);
}

TEST_CASE("eta/r transformations") {
    CHECK(metric::eta_of_r(1.0) == 0.5);
    CHECK(metric::r_of_eta(0.5) == 1.0);
    CHECK(metric::eta_of_r(1e-6) == doctest::Approx(9.99999e-7).epsilon(1e-9));
    CHECK_THROWS_AS(metric::r_of_eta(1.0), Error);
    CHECK_THROWS_AS(metric::eta_of_r(0.0), Error);
    // the inverse loses digits like eps*(1+r) from the 1 - eta cancellation
    for (double r : log_grid(1e-10, 1e10, 2))
        CHECK(metric::r_of_eta(metric::eta_of_r(r)) ==
              doctest::Approx(r).epsilon(std::max(1e-12, 1e-15 * (1.0 + r))));
}

TEST_CASE("identity f(r(eta)) = g(eta)/eta") {
    PhysicalInput in;
    const auto physical = derive_params(in);
    for (const auto& p : {artificial(0.5, 0.1), physical}) {
        for (double eta : log_grid(1e-12, 0.9, 4)) {
            const double lhs = metric::f(metric::r_of_eta(eta), p);
            const double rhs = metric::g(eta, p) / eta;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("small-eta expansion of eta^2/g^2") {
    // Relative deviation of eta^2/g^2 from eta^2/Z*^2 is <= C eta with
    // C ~ 2(A* + Z*^2)/Z*^2; fitted at the window top, it bounds the rest.
    const auto p = artificial(7.3e-6, 7.3e-7);
    const auto grid = log_grid(p.z_star * 1e-6, p.z_star * 1e-3, 4);
    auto dev = [&](double eta) {
        const double g = metric::g(eta, p);
        return std::abs((p.z_star * p.z_star) / (g * g) - 1.0);
    };
    const double c_fit = dev(grid.back()) / grid.back();
    const double c_analytic = 2.0 * (p.a_star + p.z_star * p.z_star) / (p.z_star * p.z_star);
    CHECK(c_fit == doctest::Approx(c_analytic).epsilon(0.5));
    for (double eta : grid)
        CHECK(dev(eta) <= c_fit * eta * 1.001);
}

TEST_CASE("g bounds used in the barrier proofs") {
    // g > eta/1.01 whenever A* < 0.1 Z*
    for (const auto& p : {artificial(0.5, 0.04), artificial(7.3e-6, 0.0)}) {
        for (double eta = 0.0; eta <= 1.0; eta += 1.0 / 512.0)
            CHECK(metric::g(eta, p) > eta / 1.01);
    }
    // g < eta + sqrt(G) whenever Z* < sqrt(G)
    const auto p = artificial(7.3e-6, 1e-7);
    const double rg = std::sqrt(p.g_ratio);
    REQUIRE(p.z_star < rg);
    for (double eta = 1.0 / 512.0; eta <= 1.0; eta += 1.0 / 512.0)
        CHECK(metric::g(eta, p) < eta + rg);
}
