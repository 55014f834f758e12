#include "oracles.hpp"

#include "basel/errors.hpp"
#include "basel/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace basel;

namespace {

const double kPi = oracle::pi();
const double kZeta2 = kPi * kPi / 6.0;

// Plain midpoint rule on a smooth integrand, used as an independent check.
template <class F>
double midpoint(F f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        s += f(a + (i + 0.5) * h);
    }
    return s * h;
}

}  // namespace

TEST_CASE("closed forms of the four log integrals") {
    CHECK(std::fabs(integrate(IntegralKind::LogOver1mt, 1e-12).value + kZeta2) < 1e-10);
    CHECK(std::fabs(integrate(IntegralKind::LogOver1pt, 1e-12).value + kZeta2 / 2) < 1e-10);
    CHECK(std::fabs(integrate(IntegralKind::Log1pOverT, 1e-12).value - kZeta2 / 2) < 1e-10);
    CHECK(std::fabs(integrate(IntegralKind::Log1mOverT, 1e-12).value + kZeta2) < 1e-10);
}

TEST_CASE("quadrature contract: error within max(tol, 10 err_estimate)") {
    for (auto kind : {IntegralKind::LogOver1mt, IntegralKind::LogOver1pt, IntegralKind::Log1pOverT,
                      IntegralKind::Log1mOverT}) {
        for (double tol : {1e-3, 1e-6, 1e-9, 1e-12, 1e-15}) {
            const QuadResult q = integrate(kind, tol);
            CAPTURE(to_string(kind));
            CAPTURE(tol);
            CHECK(std::fabs(q.value - closed_form(kind)) <= std::max(tol, 10 * q.err_estimate) + 1e-15);
            CHECK(q.err_estimate > 0.0);
            CHECK(q.evaluations > 0);
        }
    }
}

TEST_CASE("tolerance range is enforced") {
    CHECK_THROWS_AS(integrate(IntegralKind::LogOver1mt, 1e-16), DomainError);
    CHECK_THROWS_AS(integrate(IntegralKind::LogOver1mt, 1e-2), DomainError);
}

TEST_CASE("kind names round-trip") {
    for (auto kind : {IntegralKind::LogOver1mt, IntegralKind::LogOver1pt, IntegralKind::Log1pOverT,
                      IntegralKind::Log1mOverT}) {
        CHECK(parse_integral_kind(to_string(kind)) == kind);
    }
    CHECK(to_string(IntegralKind::Log1pOverT) == "LOG1P_OVER_T");
    CHECK_THROWS_AS(parse_integral_kind("LOG"), UsageError);
}

TEST_CASE("two integral relation") {
    CHECK(two_integral_residual(1e-12) < 1e-11);
    CHECK(two_integral_residual(1e-6) < 1e-5);
    CHECK(integrate(IntegralKind::LogOver1mt, 1e-12).value ==
          doctest::Approx(-2 * 0.8224670334241132).epsilon(1e-12));
}

TEST_CASE("integration by parts identity") {
    const double a = integrate(IntegralKind::Log1pOverT, 1e-12).value;
    const double b = integrate(IntegralKind::LogOver1pt, 1e-12).value;
    CHECK(std::fabs(a + b) < 1e-10);
}

TEST_CASE("power-log integrals") {
    for (unsigned n = 0; n <= 20; ++n) {
        const double exact = -1.0 / ((n + 1.0) * (n + 1.0));
        CHECK(std::fabs(integrate_power_log(n, 1e-12).value - exact) < 1e-12);
    }
    CHECK(std::fabs(integrate_log_power(4, 1e-12).value - 24.0) < 1e-9);
    CHECK(std::fabs(integrate_log_power(1, 1e-12).value + 1.0) < 1e-12);
}

TEST_CASE("riemann sums") {
    CHECK(riemann_sum(IntegralKind::LogOver1mt, 2) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(std::fabs(riemann_sum(IntegralKind::LogOver1mt, 100000) + kZeta2) < 1e-2);
    for (auto kind : {IntegralKind::LogOver1mt, IntegralKind::Log1mOverT, IntegralKind::LogOver1pt}) {
        const double target = closed_form(kind);
        double previous = std::fabs(riemann_sum(kind, 2) - target);
        for (long n = 32; n <= 131072; n *= 16) {
            const double err = std::fabs(riemann_sum(kind, n) - target);
            CHECK(err < previous);
            previous = err;
        }
    }
    CHECK_THROWS_AS(riemann_sum(IntegralKind::LogOver1mt, 1), DomainError);
    CHECK_THROWS(riemann_sum(IntegralKind::Log1pOverT, 10));
}

TEST_CASE("sampled monotonicity") {
    const auto a = sampled_monotonicity(IntegralKind::LogOver1mt, 10000);
    CHECK(a.direction == Monotonicity::NonDecreasing);
    CHECK(a.violations == 0);
    const auto b = sampled_monotonicity(IntegralKind::Log1mOverT, 10000);
    CHECK(b.direction == Monotonicity::NonIncreasing);
    CHECK(b.violations == 0);
}

TEST_CASE("product forms") {
    CHECK(product_form(ProductKind::Minus, 2) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(std::fabs(product_form(ProductKind::Minus, 100000) + kZeta2) < 1e-2);
    CHECK(std::fabs(product_form(ProductKind::Plus, 100000) - kZeta2 / 2) < 1e-2);
    for (auto kind : {ProductKind::Minus, ProductKind::Plus}) {
        const double e1 = std::fabs(product_form(kind, 1000) - product_limit(kind));
        const double e2 = std::fabs(product_form(kind, 16000) - product_limit(kind));
        CHECK(e2 < e1);
    }
    CHECK_THROWS_AS(product_form(ProductKind::Plus, 1), DomainError);
}

TEST_CASE("dilog S") {
    CHECK(dilog_S(0.0, DilogMode::Series, 1e-12) == 0.0);
    CHECK(dilog_S(0.0, DilogMode::Integral, 1e-12) == doctest::Approx(0.0));
    CHECK(std::fabs(dilog_S(0.5, DilogMode::Series, 1e-12) - kZeta2) < 1e-9);
    CHECK(std::fabs(dilog_S(0.5, DilogMode::Integral, 1e-12) - kZeta2) < 1e-10);
    CHECK(std::fabs(dilog_S(-0.5, DilogMode::Series, 1e-12) + kZeta2 / 2) < 1e-9);
    CHECK(std::fabs(dilog_S(-0.5, DilogMode::Integral, 1e-12) + kZeta2 / 2) < 1e-10);
    for (int i = 0; i <= 20; ++i) {
        const double x = -0.5 + 0.05 * i;
        CAPTURE(x);
        CHECK(std::fabs(dilog_S(x, DilogMode::Series, 1e-12) - dilog_S(x, DilogMode::Integral, 1e-12)) < 1e-9);
    }
    CHECK_THROWS_AS(dilog_S(0.51, DilogMode::Series, 1e-12), DomainError);
}

TEST_CASE("S' and the differential equation") {
    CHECK(S_prime(0.0) == 2.0);
    CHECK(S_prime(0.25) == doctest::Approx(-std::log(0.5) / 0.25).epsilon(1e-14));
    CHECK(ode_residual(0.25, 60) < 1e-12);
    for (double x : {-0.4, -0.1, 0.1, 0.3, 0.45}) {
        for (unsigned N : {5U, 20U, 80U}) {
            CHECK(ode_residual(x, N) <= ode_residual_bound(x, N) + 1e-13);
        }
    }
    CHECK_THROWS_AS(S_prime(0.5), DomainError);
    CHECK_THROWS_AS(ode_residual(-0.5, 10), DomainError);
}

TEST_CASE("S' matches a numerical derivative of S") {
    for (double x : {-0.3, 0.1, 0.2}) {
        const double h = 1e-5;
        const double fd =
            (dilog_S(x + h, DilogMode::Series, 1e-14) - dilog_S(x - h, DilogMode::Series, 1e-14)) / (2 * h);
        CHECK(fd == doctest::Approx(S_prime(x)).epsilon(1e-8));
    }
}

TEST_CASE("dilog functional equation") {
    CHECK(functional_eq_dilog(0.0) == doctest::Approx(0.0));
    CHECK(functional_eq_dilog(1.0) < 1e-9);
    CHECK(functional_eq_dilog(0.7) < 1e-9);
    CHECK(functional_eq_dilog(-0.35) < 1e-9);
    CHECK(std::fabs(dilog_h(1.0, 1e-12) + kZeta2) < 1e-10);
    CHECK(std::fabs(dilog_h(-1.0, 1e-12) - kZeta2 / 2) < 1e-10);
    // h(0.5) = -Li2(0.5) = -(pi^2/12 - ln^2(2)/2)
    CHECK(std::fabs(dilog_h(0.5, 1e-12) + (kZeta2 / 2 - std::log(2.0) * std::log(2.0) / 2)) < 1e-12);
}

TEST_CASE("inverse functional equation") {
    CHECK(functional_eq_inverse(1.0) == doctest::Approx(0.0));
    CHECK(functional_eq_inverse(std::exp(1.0)) < 1e-9);
    CHECK(functional_eq_inverse(0.1) < 1e-9);
    CHECK(functional_eq_inverse(10.0) < 1e-9);
    CHECK(functional_eq_inverse(0.1) == doctest::Approx(functional_eq_inverse(10.0)).epsilon(1e-3).scale(1e-9));
    CHECK_THROWS_AS(functional_eq_inverse(0.0), DomainError);
    const double h2 = log_ratio_h(2.0, 1e-12);
    const double independent = midpoint([](double t) { return std::log(t) / (1 + t); }, 1.0, 2.0, 20000);
    CHECK(h2 == doctest::Approx(independent).epsilon(1e-8));
}

TEST_CASE("lesko series vs integral") {
    const auto half = lesko_pair(0.5, 1, 0, 1e-12);
    CHECK(std::fabs(half.series_value - std::log(2.0)) < 1e-10);
    CHECK(std::fabs(half.integral_value - std::log(2.0)) < 1e-10);
    const auto minus_one = lesko_pair(-1.0, 1, 0, 1e-12);
    CHECK(std::fabs(minus_one.series_value + std::log(2.0)) < 1e-9);
    CHECK(std::fabs(minus_one.integral_value + std::log(2.0)) < 1e-10);
    const auto p = lesko_pair(0.9, 2, 3, 1e-12);
    CHECK(std::fabs(p.series_value - p.integral_value) < 1e-8);
    const auto q = lesko_pair(-0.9, 1, 0, 1e-12);
    CHECK(std::fabs(q.series_value + std::log(1.9)) < 1e-10);
    CHECK_THROWS_AS(lesko_pair(1.0, 1, 0, 1e-12), DomainError);
    CHECK_THROWS_AS(lesko_pair(0.5, 0, 0, 1e-12), DomainError);
    CHECK_THROWS_AS(lesko_pair(0.5, 1, -1, 1e-12), DomainError);
}
