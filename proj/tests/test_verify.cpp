#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hopfion/verify.hpp"
#include "oracles.hpp"

using namespace hopfion;

namespace {
constexpr double kPi = std::numbers::pi;
const SolitonConfig k210 = SolitonConfig::charged(2, 1, 0);
}  // namespace

TEST_CASE("the exact solution satisfies the equation of motion") {
    CHECK(std::abs(ode_residual(1.0, k210)) < 1e-8);
    for (const auto& cfg :
         {k210, SolitonConfig::charged(2, 1, 1), SolitonConfig::charged(2, 1, 2),
          SolitonConfig::charged(1, 3, 1), SolitonConfig::charged(3, 2, 0),
          SolitonConfig::neutral(2, 1, 1), SolitonConfig::neutral(2, 1, 2)}) {
        const ResidualReport scan = residual_scan(cfg);
        CHECK(scan.max_abs_residual < 1e-7);
        CHECK(!scan.eta_grid.empty());
        CHECK(std::isfinite(scan.max_abs_residual));
    }
}

TEST_CASE("the residual bound does not degrade along the family") {
    // every family member solves the same equation
    for (int l : {0, 1, 2})
        CHECK(residual_scan(SolitonConfig::charged(2, 1, l)).max_abs_residual < 1e-7);
}

TEST_CASE("a perturbed profile is rejected") {
    // f -> 1.01 f at eta = 1
    CHECK(std::abs(ode_residual(1.0, k210, 1.01)) > 1e-3);
    for (const auto& cfg : {SolitonConfig::charged(2, 1, 1), SolitonConfig::charged(1, 3, 1),
                            SolitonConfig::neutral(2, 1, 1)}) {
        const ResidualReport scan = residual_scan(cfg, 200, 1e-3, 1.01);
        CHECK(scan.max_abs_residual > 1e-3);
    }
}

TEST_CASE("exclusion windows raise domain errors") {
    CHECK_THROWS_AS(ode_residual(0.0, k210), std::domain_error);
    CHECK_THROWS_AS(ode_residual(5e-4, k210), std::domain_error);  // zero at eta = 0
    const SolitonConfig cfg = SolitonConfig::charged(2, 1, 1);
    const double eta_pole = std::asinh(std::sqrt(11.0) / 8.0);
    CHECK_THROWS_AS(ode_residual(eta_pole + 2e-4, cfg), std::domain_error);
    CHECK_NOTHROW(ode_residual(eta_pole + 5e-2, cfg));

    const ResidualReport scan = residual_scan(cfg);
    CHECK(scan.excluded_windows.size() == 3);  // two zeros + one finite pole
    for (double eta : scan.eta_grid)
        for (const auto& [lo, hi] : scan.excluded_windows) CHECK((eta < lo || eta > hi));
}

TEST_CASE("first integral is constant and matches its expected value") {
    const FirstIntegralReport report = first_integral(k210, 50);
    CHECK(report.samples == 50);
    CHECK(report.constant);
    CHECK(report.k1_stddev / std::abs(report.k1) < 1e-8);
    // extraction through the first-integral form gives (pi/4) N |m||n|(|m|+|n|)
    CHECK(report.k1 == doctest::Approx(0.25 * kPi * 1 * 2 * 1 * 3).epsilon(1e-10));
    CHECK(report.k1 == doctest::Approx(report.expected_k1).epsilon(1e-10));
    // companion constant of the integrated form
    CHECK(report.k2 == doctest::Approx(-2.0 * kPi).epsilon(1e-10));
    CHECK(report.k2 == doctest::Approx(report.expected_k2).epsilon(1e-10));
    CHECK(report.k2_stddev < 1e-8 * std::abs(report.k2));
}

TEST_CASE("first integral scales linearly in N") {
    const double k1_l0 = first_integral(k210).k1;
    const double k1_l1 = first_integral(SolitonConfig::charged(2, 1, 1)).k1;
    CHECK(k1_l1 / k1_l0 == doctest::Approx(3.0).epsilon(1e-9));
    const double k1_neutral = first_integral(SolitonConfig::neutral(2, 1, 1)).k1;
    CHECK(k1_neutral / k1_l0 == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("first integral carries the |m||n|(|m|+|n|) structure") {
    CHECK(first_integral(SolitonConfig::charged(1, 2, 0)).k1 ==
          doctest::Approx(first_integral(k210).k1).epsilon(1e-9));
    const FirstIntegralReport r31 = first_integral(SolitonConfig::charged(3, 1, 0));
    CHECK(r31.k1 == doctest::Approx(0.25 * kPi * 1 * 3 * 1 * 4).epsilon(1e-9));
    // the |n| > |m| branch works and flips the sign of k2
    const FirstIntegralReport r13 = first_integral(SolitonConfig::charged(1, 3, 1));
    CHECK(r13.constant);
    CHECK(r13.k1 == doctest::Approx(0.25 * kPi * 3 * 1 * 3 * 4).epsilon(1e-9));
    CHECK(r13.k2 == doctest::Approx(1.5 * kPi).epsilon(1e-9));
}

TEST_CASE("verification is blind to the scale a") {
    const ResidualReport r_half =
        residual_scan(SolitonConfig::charged(2, 1, 1, Scale(0.5)));
    const ResidualReport r_two =
        residual_scan(SolitonConfig::charged(2, 1, 1, Scale(2.0)));
    CHECK(r_half.max_abs_residual == r_two.max_abs_residual);
    CHECK(first_integral(SolitonConfig::charged(2, 1, 1, Scale(0.5))).k1 ==
          first_integral(SolitonConfig::charged(2, 1, 1, Scale(2.0))).k1);
}

TEST_CASE("residual and first integral degenerate on the vacuum") {
    const SolitonConfig vac = SolitonConfig::neutral(2, 1, 0);
    CHECK_THROWS_AS(ode_residual(1.0, vac), std::domain_error);
    CHECK_THROWS_AS(first_integral(vac), std::domain_error);
    CHECK(boundary_check(vac).pass);  // n3 = -1 identically
}

TEST_CASE("boundary conditions hold for valid configs and fail for corrupted ones") {
    for (const auto& cfg : {k210, SolitonConfig::charged(1, 3, 2),
                            SolitonConfig::neutral(2, 1, 1), SolitonConfig::neutral(3, 2, 2)}) {
        const BoundaryCheckResult check = boundary_check(cfg);
        CHECK(check.pass);
        CHECK(check.n3_origin == doctest::Approx(-1.0));
        CHECK(check.n3_far == doctest::Approx(check.expected_far).epsilon(1e-9));
    }
    // a non-integer half-turn count lands n3(eta_max) away from +-1
    const BoundaryCheckResult corrupted = detail::boundary_check_raw(2.0, 1.0, 2.5, true);
    CHECK_FALSE(corrupted.pass);
    CHECK(std::abs(corrupted.n3_far - corrupted.expected_far) > 0.1);
}
