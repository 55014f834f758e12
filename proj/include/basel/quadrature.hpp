#pragma once

/**
 * @file quadrature.hpp
 * @brief Log-singular integrals on [0, 1], their Riemann-sum and product
 * limits, the power series S(x) = sum (2x)^n / n^2, and the two
 * functional equations of the dilogarithm-type integrals.
 *
 * Integration uses a tanh-sinh (double-exponential) rule on (0, 1) with
 * level doubling. Abscissae are generated together with their distance to
 * the right endpoint, so integrands never see t = 0 or t = 1 and can form
 * ln t or ln(1 - t) without cancellation near either end.
 */

#include <cstddef>
#include <string>

namespace basel {

enum class IntegralKind {
    LogOver1mt,  // ln t / (1 - t)   -> -pi^2/6
    LogOver1pt,  // ln t / (1 + t)   -> -pi^2/12
    Log1pOverT,  // ln(1 + t) / t    -> +pi^2/12
    Log1mOverT,  // ln(1 - t) / t    -> -pi^2/6
};

/// "LOG_OVER_1MT", "LOG_OVER_1PT", "LOG1P_OVER_T", "LOG1M_OVER_T"
std::string to_string(IntegralKind kind);
IntegralKind parse_integral_kind(const std::string& text);

/// Exact value of the [0,1] integral (binary64 pi).
double closed_form(IntegralKind kind);

/// Integrand at t, with tc = 1 - t supplied separately for accuracy.
double integrand(IntegralKind kind, double t, double tc);

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t evaluations = 0;
};

inline constexpr double kMinTolerance = 1e-15;
inline constexpr double kMaxTolerance = 1e-3;
inline constexpr int kMaxQuadratureLevel = 12;

/// Integral of the kind's integrand over [0, 1].
/// DomainError unless 1e-15 <= tol <= 1e-3; AccuracyError if the level cap
/// is hit before successive levels agree to tol.
QuadResult integrate(IntegralKind kind, double tol);

/// int_0^1 t^n ln t dt by the same rule (exact value -1/(n+1)^2).
QuadResult integrate_power_log(unsigned n, double tol);

/// int_0^1 (ln t)^k dt = int_{-inf}^0 s^k e^s ds (exact value (-1)^k k!).
QuadResult integrate_log_power(unsigned k, double tol);

/// |I(LogOver1mt) - 2 I(LogOver1pt)|
double two_integral_residual(double tol);

/// (1/n) sum_{k=1}^{n-1} f(k/n). Accepts LogOver1mt, Log1mOverT, LogOver1pt.
double riemann_sum(IntegralKind kind, long n);

enum class Monotonicity { NonDecreasing, NonIncreasing, Neither };
std::string to_string(Monotonicity m);

struct MonotonicitySample {
    Monotonicity direction = Monotonicity::Neither;
    std::size_t samples = 0;
    /// Adjacent pairs that break the reported direction (0 unless Neither).
    std::size_t violations = 0;
};

/// Checks f(k/n), k = 1..n-1, for a consistent direction.
MonotonicitySample sampled_monotonicity(IntegralKind kind, long n);

enum class ProductKind {
    Minus,  // prod (1 - k/n)^(1/k)  ->  exp(-pi^2/6)
    Plus,   // prod (1 + k/n)^(1/k)  ->  exp(+pi^2/12)
};
std::string to_string(ProductKind kind);
ProductKind parse_product_kind(const std::string& text);

/// Log of the product: sum_{k=1}^{n-1} (1/k) ln(1 +- k/n). DomainError for n < 2.
double product_form(ProductKind kind, long n);
/// Limit of product_form as n -> infinity.
double product_limit(ProductKind kind);

enum class DilogMode { Series, Integral };
std::string to_string(DilogMode mode);
DilogMode parse_dilog_mode(const std::string& text);

/// S(x) = sum_{n>=1} (2x)^n / n^2 on [-1/2, 1/2].
/// Series mode truncates when the tail bound drops below tol; integral mode
/// evaluates -int_0^1 ln(1 - 2xu)/u du. DomainError for |x| > 1/2.
double dilog_S(double x, DilogMode mode, double tol);

/// S'(x) = -ln(1 - 2x)/x, S'(0) = 2. DomainError for |x| >= 1/2.
double S_prime(double x);

/// |S_N' + x S_N'' - 2/(1 - 2x)| for the series truncated after N terms,
/// with both derivatives taken term by term. DomainError for |x| >= 1/2 or N = 0.
double ode_residual(double x, unsigned N);
/// Truncation part of ode_residual: 2 |2x|^N / (1 - |2x|).
double ode_residual_bound(double x, unsigned N);

/// h(x) = int_0^x ln(1 - t)/t dt for |x| <= 1.
double dilog_h(double x, double tol);
/// |h(x) + h(-x) - h(x^2)/2|
double functional_eq_dilog(double x, double tol = 1e-12);

/// H(x) = int_1^x ln t/(1 + t) dt for x > 0.
double log_ratio_h(double x, double tol);
/// |H(x) + H(1/x) - (ln x)^2 / 2|; DomainError for x <= 0.
double functional_eq_inverse(double x, double tol = 1e-12);

struct LeskoPair {
    double series_value = 0.0;
    double integral_value = 0.0;
    std::size_t series_terms = 0;
};

/// sum_{n>=1} r^n/(an + b) against (1/a) int_0^1 r u^(b/a)/(1 - ru) du.
/// Requires r in [-1, 1), a > 0, b >= 0.
LeskoPair lesko_pair(double r, double a, double b, double tol);

}  // namespace basel
