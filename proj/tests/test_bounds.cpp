#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btda/bounds.hpp"
#include "btda/special_functions.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace btda;

namespace {

constexpr double pi = 3.14159265358979323846;

bound_params cylinder_params() { return bound_params(2, 2.0 * pi, 1.0); }
bound_params torus_params() { return bound_params(2, (8.0 - 0.522) * pi * pi, 1.0); }

// beta(x) recomputed with the quadrature-based incomplete beta
double beta_fn_quadrature(double x, const bound_params& p) {
    const double th = std::asin(x / (4.0 * p.delta));
    const double c = std::cos(th);
    const double arg = 1.0 - x * x * c * c / (16.0 * p.delta * p.delta);
    const double ix = oracle::reg_inc_beta_quadrature(arg, 0.5 * (p.k + 1), 0.5);
    const double denom = std::pow(c, p.k) / std::pow(2.0, p.k + 1) * ix *
                         ball_volume(p.k, x);
    return p.vol_m / denom;
}

} // namespace

TEST_CASE("theta basics") {
    CHECK(theta(1e-12, 1.0) == doctest::Approx(0.0).epsilon(0.0).scale(1e-11));
    CHECK(theta(4.0, 1.0) == doctest::Approx(pi / 2).epsilon(1e-12));
    CHECK(theta(0.49, 1.0) == doctest::Approx(std::asin(0.1225)).epsilon(1e-14));
    CHECK_THROWS_AS(theta(4.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(theta(0.0, 1.0), std::domain_error);
}

TEST_CASE("beta_fn against an independent quadrature evaluation") {
    const auto p = cylinder_params();
    for (const double x : {0.1, 0.245, 0.49, 0.9, 1.5}) {
        CHECK(beta_fn(x, p) ==
              doctest::Approx(beta_fn_quadrature(x, p)).epsilon(1e-9));
    }
}

TEST_CASE("beta_fn diverges as x -> 0 like x^-k") {
    const auto p = cylinder_params();
    // x^k * beta(x) tends to a constant
    const double c1 = std::pow(1e-4, 2) * beta_fn(1e-4, p);
    const double c2 = std::pow(1e-6, 2) * beta_fn(1e-6, p);
    CHECK(c1 == doctest::Approx(c2).epsilon(1e-3));
    CHECK(beta_fn(1e-6, p) > 1e10);
}

TEST_CASE("beta_fn domain") {
    const auto p = cylinder_params();
    CHECK_THROWS_AS(beta_fn(0.0, p), std::domain_error);
    CHECK_THROWS_AS(beta_fn(2.0, p), std::domain_error);
    CHECK_NOTHROW(beta_fn(1.999, p));
}

TEST_CASE("sample_size reproduces the reference values") {
    const auto cyl = cylinder_params();
    CHECK(sample_size({0.49, 0.1}, cyl) == 638);
    CHECK(sample_size({0.2, 0.1}, cyl) == 4160);
    CHECK(sample_size({0.3, 0.1}, cyl) == 1763);
    CHECK(sample_size({0.4, 0.1}, cyl) == 967);
    const auto tor = torus_params();
    CHECK(sample_size({0.49, 0.1}, tor) == 9809);
    CHECK(sample_size({0.49, 0.2}, tor) == 9157);
}

TEST_CASE("sample_size nonincreasing in gamma and eps") {
    const auto p = cylinder_params();
    std::int64_t prev = sample_size({0.49, 0.05}, p);
    for (int i = 1; i <= 18; ++i) {
        const double g = 0.05 + 0.05 * i;
        const std::int64_t cur = sample_size({0.49, g}, p);
        CHECK(cur <= prev);
        prev = cur;
    }
    prev = sample_size({0.15, 0.1}, p);
    for (int i = 1; i <= 30; ++i) {
        const double eps = 0.15 + 0.01 * i;
        if (eps >= 0.5) break;
        const std::int64_t cur = sample_size({eps, 0.1}, p);
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("sample_size preconditions") {
    const auto p = cylinder_params();
    CHECK_THROWS_AS(sample_size({0.5, 0.1}, p), std::domain_error);
    CHECK_THROWS_AS(sample_size({0.49, 0.0}, p), std::domain_error);
    CHECK_THROWS_AS(sample_size({0.49, 1.0}, p), std::domain_error);
}

TEST_CASE("lemma lower bound small-eps limits") {
    const auto p = cylinder_params();
    const double eps = 1e-6;
    const double vb = ball_volume(p.k, eps);
    CHECK(vol_lower_bound_boundary(eps, p) / vb ==
          doctest::Approx(0.5).epsilon(1e-5));
    CHECK(vol_lower_bound_interior(eps, p) / vb ==
          doctest::Approx(1.0).epsilon(1e-5));
    CHECK(vol_lower_bound(eps, p) / vb ==
          doctest::Approx(1.0 / std::pow(2.0, p.k + 1)).epsilon(1e-5));
}

TEST_CASE("lemma interior bound closed form") {
    const auto p = cylinder_params();
    const double th = std::asin(0.125);
    CHECK(vol_lower_bound_interior(0.25, p) ==
          doctest::Approx(std::cos(th) * std::cos(th) * pi * 0.25 * 0.25)
              .epsilon(1e-12));
}

TEST_CASE("lower bounds never exceed the ball volume and order correctly") {
    for (const auto& p : {cylinder_params(), torus_params(),
                          bound_params(1, pi, 1.0)}) {
        for (int i = 1; i <= 49; ++i) {
            const double eps = p.delta * i / 50.0;
            const double all = vol_lower_bound(eps, p);
            const double bdry = vol_lower_bound_boundary(eps, p);
            const double intr = vol_lower_bound_interior(eps, p);
            CHECK(all <= bdry);
            CHECK(all <= intr);
            CHECK(bdry <= ball_volume(p.k, eps));
        }
    }
}

TEST_CASE("identity vol_lower_bound(eps) * beta(eps) = vol(M)") {
    for (const auto& p : {cylinder_params(), torus_params(),
                          bound_params(1, pi, 1.0)}) {
        for (int i = 1; i <= 50; ++i) {
            const double eps = p.delta * i / 51.0;
            CHECK(vol_lower_bound(eps, p) * beta_fn(eps, p) ==
                  doctest::Approx(p.vol_m).epsilon(1e-9));
        }
    }
}

TEST_CASE("bound_params invariants") {
    CHECK_THROWS_AS(bound_params(0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bound_params(2, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bound_params(2, 1.0, -1.0), std::domain_error);
}
