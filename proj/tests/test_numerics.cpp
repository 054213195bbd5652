#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hopfion/quadrature.hpp"
#include "hopfion/root_finding.hpp"

using namespace hopfion;

TEST_CASE("gauss-kronrod on smooth integrands") {
    const auto cube = adaptive_gauss_kronrod([](double x) { return 3.0 * x * x; },
                                             0.0, 1.0, 1e-12);
    CHECK(cube.converged);
    CHECK(cube.value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(cube.error_estimate <= 1e-12 * std::abs(cube.value) + 1e-300);

    const auto sine = adaptive_gauss_kronrod([](double x) { return std::sin(x); },
                                             0.0, std::numbers::pi, 1e-12);
    CHECK(sine.converged);
    CHECK(sine.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("gauss-kronrod refines an integrable endpoint singularity") {
    const auto r = adaptive_gauss_kronrod(
        [](double x) { return 0.5 / std::sqrt(x); }, 0.0, 1.0, 1e-9, 2000);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.subdivisions > 5);
}

TEST_CASE("gauss-kronrod reports non-convergence with a partial value") {
    const auto r = adaptive_gauss_kronrod(
        [](double x) { return 0.5 / std::sqrt(x); }, 0.0, 1.0, 1e-12, 2);
    CHECK_FALSE(r.converged);
    CHECK(r.value > 0.9);  // partial value is still meaningful
    CHECK(r.error_estimate > 0.0);
    CHECK(r.subdivisions == 2);
}

TEST_CASE("gauss-kronrod on an identically zero integrand") {
    const auto r = adaptive_gauss_kronrod([](double) { return 0.0; }, 0.0, 1.0, 1e-12);
    CHECK(r.converged);
    CHECK(r.value == 0.0);
    CHECK(r.error_estimate == 0.0);
}

TEST_CASE("semi-infinite integration via tanh compactification") {
    const auto expo = integrate_semi_infinite(
        [](double eta) { return std::exp(-eta); }, 1e-12);
    CHECK(expo.converged);
    CHECK(expo.value == doctest::Approx(1.0).epsilon(1e-12));

    const auto gamma2 = integrate_semi_infinite(
        [](double eta) { return eta * std::exp(-eta); }, 1e-12);
    CHECK(gamma2.value == doctest::Approx(1.0).epsilon(1e-12));

    // integrand evaluated strictly inside (0, inf): 1/sqrt(eta) decays fine
    const auto gauss = integrate_semi_infinite(
        [](double eta) { return std::exp(-eta * eta) / std::sqrt(eta); }, 1e-10, 500);
    CHECK(gauss.converged);
    // Gamma(1/4)/2
    CHECK(gauss.value == doctest::Approx(1.8128049541109543).epsilon(1e-9));
}

TEST_CASE("brent root finding") {
    CHECK(brent_root([](double x) { return std::cos(x); }, 1.0, 2.0) ==
          doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-13));
    CHECK(brent_root([](double x) { return x * x * x - 2.0; }, 0.0, 2.0) ==
          doctest::Approx(std::cbrt(2.0)).epsilon(1e-13));
    CHECK(brent_root([](double x) { return x; }, -1.0, 1.0) ==
          doctest::Approx(0.0).epsilon(1e-13));
    CHECK_THROWS_AS(brent_root([](double x) { return 1.0 + x * x; }, -1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("bracket expansion") {
    auto f = [](double x) { return x - 10.0; };
    const auto [lo, hi] = expand_bracket_right(f, 0.0, 1.0);
    CHECK(f(lo) * f(hi) <= 0.0);
    CHECK(brent_root(f, lo, hi) == doctest::Approx(10.0).epsilon(1e-13));
    CHECK_THROWS_AS(expand_bracket_right([](double) { return 1.0; }, 0.0, 1.0, 50.0),
                    std::runtime_error);
}
