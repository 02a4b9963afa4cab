#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btda/special_functions.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace btda;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("ln_gamma at exact anchor points") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(0.0).scale(1e-14));
    CHECK(ln_gamma(2.0) == doctest::Approx(0.0).epsilon(0.0).scale(1e-14));
    CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(pi)).epsilon(1e-14));
}

TEST_CASE("ln_gamma against the standard library on [0.5, 200]") {
    for (int i = 0; i <= 2000; ++i) {
        const double x = 0.5 + (200.0 - 0.5) * i / 2000.0;
        const double ref = std::lgamma(x);
        const double got = ln_gamma(x);
        CHECK(std::fabs(got - ref) <= 1e-13 * std::max(1.0, std::fabs(ref)));
    }
}

TEST_CASE("ln_gamma recurrence ln G(x+1) = ln G(x) + ln x") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        const double x = 0.5 + 50.0 * oracle::uniform01(rng);
        CHECK(ln_gamma(x + 1.0) ==
              doctest::Approx(ln_gamma(x) + std::log(x)).epsilon(1e-13));
    }
}

TEST_CASE("ln_gamma domain errors") {
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-1.5), std::domain_error);
}

TEST_CASE("reg_inc_beta endpoints and symmetry point") {
    CHECK(reg_inc_beta(0.0, 2.0, 3.0) == 0.0);
    CHECK(reg_inc_beta(1.0, 2.0, 3.0) == 1.0);
    CHECK(reg_inc_beta(0.5, 2.0, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(reg_inc_beta(0.5, 7.0, 7.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("reg_inc_beta frozen quadrature value") {
    // adaptive quadrature of t^0.5 (1-t)^-0.5 on [0, 0.3], normalized
    CHECK(reg_inc_beta(0.3, 1.5, 0.5) ==
          doctest::Approx(0.077274289987545608).epsilon(1e-12));
}

TEST_CASE("reg_inc_beta against the quadrature oracle") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const double x = oracle::uniform01(rng);
        const double a = 0.5 + 9.5 * oracle::uniform01(rng);
        const double b = 0.5 + 9.5 * oracle::uniform01(rng);
        const double want = oracle::reg_inc_beta_quadrature(x, a, b);
        CHECK(std::fabs(reg_inc_beta(x, a, b) - want) <= 1e-10);
    }
}

TEST_CASE("reg_inc_beta symmetry identity") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const double x = oracle::uniform01(rng);
        const double a = 0.5 + 9.5 * oracle::uniform01(rng);
        const double b = 0.5 + 9.5 * oracle::uniform01(rng);
        CHECK(std::fabs(reg_inc_beta(x, a, b) + reg_inc_beta(1.0 - x, b, a) - 1.0) <=
              1e-10);
    }
}

TEST_CASE("reg_inc_beta monotone in x") {
    const double a = 1.5, b = 0.5;
    double prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double cur = reg_inc_beta(i / 200.0, a, b);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("reg_inc_beta domain errors") {
    CHECK_THROWS_AS(reg_inc_beta(-0.1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_inc_beta(1.1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_inc_beta(0.5, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_inc_beta(0.5, 1.0, -2.0), std::domain_error);
}

TEST_CASE("ball_volume in low dimensions") {
    CHECK(ball_volume(1, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(ball_volume(2, 1.0) == doctest::Approx(pi).epsilon(1e-14));
    CHECK(ball_volume(3, 1.0) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-14));
    CHECK(ball_volume(2, 0.49) == doctest::Approx(pi * 0.49 * 0.49).epsilon(1e-14));
}

TEST_CASE("ball_volume scaling law") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const int k = 1 + static_cast<int>(6 * oracle::uniform01(rng));
        const double r = 0.1 + 3.0 * oracle::uniform01(rng);
        const double lam = 0.1 + 4.0 * oracle::uniform01(rng);
        CHECK(ball_volume(k, lam * r) ==
              doctest::Approx(std::pow(lam, k) * ball_volume(k, r)).epsilon(1e-12));
    }
}

TEST_CASE("cap_volume half ball at phi = pi/2") {
    for (int k = 1; k <= 6; ++k)
        CHECK(cap_volume(k, 1.3, pi / 2) ==
              doctest::Approx(0.5 * ball_volume(k, 1.3)).epsilon(1e-10));
}

TEST_CASE("cap_volume matches the 2-d circular segment") {
    for (const double phi : {0.1, pi / 6, 0.7, 1.2, pi / 2}) {
        CHECK(cap_volume(2, 1.0, phi) ==
              doctest::Approx(oracle::circular_segment_area(1.0, phi)).epsilon(1e-10));
        CHECK(cap_volume(2, 2.5, phi) ==
              doctest::Approx(oracle::circular_segment_area(2.5, phi)).epsilon(1e-10));
    }
}

TEST_CASE("cap_volume matches the 3-d closed form") {
    for (const double phi : {0.2, pi / 4, 1.0, pi / 2})
        CHECK(cap_volume(3, 1.0, phi) ==
              doctest::Approx(oracle::spherical_cap_volume_3d(1.0, phi)).epsilon(1e-10));
}

TEST_CASE("cap_volume monotone in phi") {
    for (const int k : {1, 2, 3}) {
        double prev = 0.0;
        for (int i = 1; i <= 100; ++i) {
            const double cur = cap_volume(k, 1.0, (pi / 2) * i / 100.0);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("cap_spec invariants") {
    CHECK_THROWS_AS(cap_spec(0, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(cap_spec(2, -1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(cap_spec(2, 1.0, 2.0), std::domain_error);
    CHECK(cap_spec(2, 2.0, pi / 6).base_radius() == doctest::Approx(1.0).epsilon(1e-12));
}
