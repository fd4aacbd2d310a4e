#include <doctest.h>

#include <cmath>

#include "rwn/barriers.hpp"
#include "rwn/error.hpp"
#include "rwn/metric.hpp"
#include "rwn/params.hpp"

using namespace rwn;

namespace {

ModelParams physical(double z) {
    PhysicalInput in;
    in.z = z;
    return derive_params(in);
}

constexpr long test_grid = 20000;

} // namespace

TEST_CASE("upper barrier passes across the physical range") {
    for (double z : {1.0, 137.0}) {
        const auto rep = barriers::check_upper_barrier(physical(z), test_grid);
        CHECK(rep.passed);
        CHECK(rep.hypotheses_ok);
        CHECK(rep.min_margin > 0.0);
    }
    // only the naked sector is used in the proof: A* just below Z* still works
    ModelParams p = physical(1.0);
    p.a_star = 0.999 * p.z_star;
    CHECK(barriers::check_upper_barrier(p, test_grid).passed);
}

TEST_CASE("lower barrier for negative k passes at physical parameters") {
    const auto rep = barriers::check_lower_barrier_neg_k(physical(1.0).with_k(-1), test_grid);
    CHECK(rep.passed);
    CHECK(rep.hypotheses_ok);
}

TEST_CASE("lower-barrier quartic coefficients are positive up to sqrt(G)") {
    const double rg = std::sqrt(constants::g_ratio_physical);
    for (double zs : {rg, rg / 7.0, rg * 1e-10, 1e-40}) {
        const auto a = barriers::lower_barrier_coefficients(zs);
        for (double c : a)
            CHECK(c > 0.0);
    }
}

TEST_CASE("lower-barrier polynomial identity p - p0 = (Z*(1-eta)/4) quartic") {
    // gamma-independent content of the decomposition, checked at a Z* large
    // enough for clean arithmetic.
    for (double zs : {1e-2, 1e-5}) {
        const auto a = barriers::lower_barrier_coefficients(zs);
        for (double eta = 0.0; eta <= 1.0; eta += 1.0 / 64.0) {
            const double g2 = (1.0 + zs + zs * zs) * eta * eta - (zs + 2.0 * zs * zs) * eta +
                              zs * zs;
            const double bracket = eta + 1.5 * zs * (1.0 - eta);
            const double lhs = g2 * bracket * bracket - std::pow(eta, 4);
            const double rhs = zs * (1.0 - eta) / 4.0 *
                               (a[0] * eta * eta * eta + a[1] * eta * eta + a[2] * eta + a[3]);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
    }
}

TEST_CASE("outside the hypothesis A* <= Z*/2 the quartic can go negative") {
    // With A* = Z* the remainder is negative near eta = Z*.
    const double zs = 0.01;
    const double eta = zs;
    const double g2_az = (1.0 + 2.0 * zs + zs * zs) * eta * eta -
                         2.0 * (zs + zs * zs) * eta + zs * zs;
    const double bracket = eta + 1.5 * zs * (1.0 - eta);
    CHECK(g2_az * bracket * bracket - std::pow(eta, 4) < 0.0);
}

TEST_CASE("barrier nodes") {
    ModelParams p;
    p.lambda = 0.000383;
    p.gamma = -0.01;
    p.z_star = 1e-4;
    p.g_ratio = 1e-4;
    const auto [a1, b1] = barriers::barrier_nodes(1, p, 1.01);
    CHECK(a1 == doctest::Approx(p.lambda / (1.0 + p.lambda + 1.01 * 0.01)).epsilon(1e-12));
    CHECK(a1 == doctest::Approx(3.791e-4).epsilon(2e-3));
    CHECK(b1 > a1);
    CHECK(b1 < 1.0);

    p.lambda = 1e-12; // both corners collapse to 0 with lambda
    const auto [a2, b2] = barriers::barrier_nodes(1, p, 1.01);
    CHECK(a2 < 1e-11);
    CHECK(b2 < 1e-11);

    p.lambda = 0.000383;
    p.gamma = -1e-13; // symmetric denominators as gamma -> 0
    const auto [a3, b3] = barriers::barrier_nodes(1, p, 1.01);
    CHECK(a3 == doctest::Approx(b3).epsilon(1e-9));

    p.gamma = -1.5; // outside (-1/delta, 0)
    CHECK_THROWS_AS(barriers::barrier_nodes(1, p, 1.01), Error);
    CHECK_THROWS_AS(barriers::barrier_nodes(0, p, 1.01), Error);
}

TEST_CASE("horizontal barriers pass at physical parameters") {
    for (int k : {1, 2, 5}) {
        const auto rep = barriers::check_horiz_barriers(k, physical(1.0).with_k(k), test_grid);
        CHECK(rep.passed);
        CHECK(rep.hypotheses_ok);
    }
}

TEST_CASE("slanted barrier passes and the proof constants reproduce") {
    const auto rep1 = barriers::check_slanted_barrier(1, physical(1.0), test_grid);
    CHECK(rep1.passed);
    CHECK(rep1.hypotheses_ok);

    const auto rep10 = barriers::check_slanted_barrier(10, physical(1.0), test_grid);
    CHECK(rep10.passed);
    CHECK(rep10.min_margin > rep1.min_margin);

    CHECK(barriers::slanted_proof_lhs(1) == doctest::Approx(5.89).epsilon(1e-2));
    CHECK(barriers::slanted_proof_rhs(1) == doctest::Approx(6.19).epsilon(1e-2));
    // u < v for all k >= 1 (u linear, v quadratic in k)
    for (int k = 1; k <= 40; ++k)
        CHECK(barriers::slanted_proof_lhs(k) < barriers::slanted_proof_rhs(k));
}

TEST_CASE("eta0 barrier passes over the proposition's Z range") {
    for (double z : {1.0, 137.0}) {
        const auto rep = barriers::check_eta0_barrier(physical(z), test_grid);
        CHECK(rep.passed);
        CHECK(rep.hypotheses_ok);
    }
    CHECK(barriers::eta0_crossing_bound() == doctest::Approx(0.00364).epsilon(1e-2));
    CHECK(barriers::eta0_crossing_bound() > 0.003);
}

TEST_CASE("hypotheses flags clear outside the stated ranges") {
    // Z = 200: gamma < -1, Z* > sqrt(G)
    const auto p = physical(200.0);
    CHECK_FALSE(barriers::check_lower_barrier_neg_k(p, 2000).hypotheses_ok);
    CHECK_FALSE(barriers::check_eta0_barrier(p, 2000).hypotheses_ok);
    // slanted needs gamma > -1/(nu delta): Z = 100 violates
    CHECK_FALSE(barriers::check_slanted_barrier(1, physical(100.0), 2000).hypotheses_ok);
}

TEST_CASE("check_all produces the five named reports") {
    const auto reports = barriers::check_all(physical(10.0), 1, 2000);
    REQUIRE(reports.size() == 5);
    CHECK(reports[0].name == "upper-barrier");
    CHECK(reports[1].name == "lower-barrier-neg-k");
    CHECK(reports[2].name == "horiz-barriers");
    CHECK(reports[3].name == "slanted-barrier");
    CHECK(reports[4].name == "eta0-barrier");
    for (const auto& r : reports)
        CHECK(r.passed);
}
