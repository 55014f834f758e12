#include "basel/quadrature.hpp"

#include "basel/detail/summation.hpp"
#include "basel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace basel {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Nodes beyond |s| = 4.5 carry weights below 1e-60.
constexpr double kSMax = 4.5;

void check_tolerance(double tol) {
    if (!(tol >= kMinTolerance && tol <= kMaxTolerance)) {
        throw DomainError("tolerance must lie in [1e-15, 1e-3]");
    }
}

// ln t given t and tc = 1 - t, accurate at both ends.
double log_of(double t, double tc) { return t < 0.5 ? std::log(t) : std::log1p(-tc); }

// Tanh-sinh rule on (0, 1): u = 1/(1 + exp(-pi sinh s)), du/ds = pi cosh s u (1 - u).
// f is called as f(u, 1 - u). Levels halve the step until successive
// estimates agree to tol (or to the rounding floor of the sum).
template <class F>
QuadResult tanh_sinh(F&& f, double tol) {
    detail::CompensatedSum raw;
    double abs_raw = 0.0;
    std::size_t evaluations = 0;

    auto node = [&](double s) {
        const double e = std::exp(kPi * std::sinh(s));
        const double u = e / (1.0 + e);
        const double uc = 1.0 / (1.0 + e);
        if (u == 0.0 || uc == 0.0) {
            return;
        }
        const double w = kPi * std::cosh(s) * u * uc;
        const double term = w * f(u, uc);
        ++evaluations;
        raw += term;
        abs_raw += std::fabs(term);
    };

    double h = 1.0;
    const long j_max = static_cast<long>(kSMax);
    for (long j = -j_max; j <= j_max; ++j) {
        node(static_cast<double>(j));
    }
    double previous = h * raw.value();

    for (int level = 1; level <= kMaxQuadratureLevel; ++level) {
        h *= 0.5;
        const long n_max = static_cast<long>(kSMax / h);
        for (long j = 1; j <= n_max; j += 2) {
            node(j * h);
            node(-j * h);
        }
        const double current = h * raw.value();
        const double diff = std::fabs(current - previous);
        const double floor = 64.0 * kEps * h * abs_raw;
        if (level >= 3 && (diff <= tol || diff <= floor)) {
            // never report zero: consecutive levels can agree bit-for-bit
            return {current, std::max(diff, floor), evaluations};
        }
        previous = current;
    }
    throw AccuracyError("tanh-sinh quadrature did not converge", previous, tol);
}

}  // namespace

std::string to_string(IntegralKind kind) {
    switch (kind) {
        case IntegralKind::LogOver1mt:
            return "LOG_OVER_1MT";
        case IntegralKind::LogOver1pt:
            return "LOG_OVER_1PT";
        case IntegralKind::Log1pOverT:
            return "LOG1P_OVER_T";
        case IntegralKind::Log1mOverT:
            return "LOG1M_OVER_T";
    }
    return "?";
}

IntegralKind parse_integral_kind(const std::string& text) {
    for (auto kind : {IntegralKind::LogOver1mt, IntegralKind::LogOver1pt, IntegralKind::Log1pOverT,
                      IntegralKind::Log1mOverT}) {
        if (text == to_string(kind)) {
            return kind;
        }
    }
    throw UsageError("unknown integral kind '" + text + "'");
}

double closed_form(IntegralKind kind) {
    switch (kind) {
        case IntegralKind::LogOver1mt:
        case IntegralKind::Log1mOverT:
            return -kZeta2;
        case IntegralKind::LogOver1pt:
            return -kZeta2 / 2.0;
        case IntegralKind::Log1pOverT:
            return kZeta2 / 2.0;
    }
    return 0.0;
}

double integrand(IntegralKind kind, double t, double tc) {
    switch (kind) {
        case IntegralKind::LogOver1mt:
            return log_of(t, tc) / tc;
        case IntegralKind::LogOver1pt:
            return log_of(t, tc) / (1.0 + t);
        case IntegralKind::Log1pOverT:
            return std::log1p(t) / t;
        case IntegralKind::Log1mOverT:
            return log_of(tc, t) / t;
    }
    return 0.0;
}

QuadResult integrate(IntegralKind kind, double tol) {
    check_tolerance(tol);
    return tanh_sinh([kind](double u, double uc) { return integrand(kind, u, uc); }, tol);
}

QuadResult integrate_power_log(unsigned n, double tol) {
    check_tolerance(tol);
    return tanh_sinh([n](double u, double uc) { return std::pow(u, static_cast<double>(n)) * log_of(u, uc); },
                     tol);
}

QuadResult integrate_log_power(unsigned k, double tol) {
    check_tolerance(tol);
    return tanh_sinh([k](double u, double uc) { return std::pow(log_of(u, uc), static_cast<double>(k)); }, tol);
}

double two_integral_residual(double tol) {
    const double minus = integrate(IntegralKind::LogOver1mt, tol).value;
    const double plus = integrate(IntegralKind::LogOver1pt, tol).value;
    return std::fabs(minus - 2.0 * plus);
}

double riemann_sum(IntegralKind kind, long n) {
    if (n < 2) {
        throw DomainError("riemann_sum needs n >= 2");
    }
    if (kind == IntegralKind::Log1pOverT) {
        throw DomainError("riemann_sum is defined for LOG_OVER_1MT, LOG1M_OVER_T, LOG_OVER_1PT");
    }
    const double dn = static_cast<double>(n);
    detail::CompensatedSum sum;
    for (long k = 1; k < n; ++k) {
        sum += integrand(kind, static_cast<double>(k) / dn, static_cast<double>(n - k) / dn);
    }
    return sum.value() / dn;
}

std::string to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::NonDecreasing:
            return "non-decreasing";
        case Monotonicity::NonIncreasing:
            return "non-increasing";
        case Monotonicity::Neither:
            return "neither";
    }
    return "?";
}

MonotonicitySample sampled_monotonicity(IntegralKind kind, long n) {
    if (n < 3) {
        throw DomainError("sampled_monotonicity needs n >= 3");
    }
    const double dn = static_cast<double>(n);
    std::size_t rises = 0;
    std::size_t falls = 0;
    double prev = integrand(kind, 1.0 / dn, static_cast<double>(n - 1) / dn);
    for (long k = 2; k < n; ++k) {
        const double cur = integrand(kind, static_cast<double>(k) / dn, static_cast<double>(n - k) / dn);
        if (cur > prev) ++rises;
        if (cur < prev) ++falls;
        prev = cur;
    }
    MonotonicitySample out;
    out.samples = static_cast<std::size_t>(n - 1);
    if (falls == 0) {
        out.direction = Monotonicity::NonDecreasing;
    } else if (rises == 0) {
        out.direction = Monotonicity::NonIncreasing;
    } else {
        out.direction = Monotonicity::Neither;
        out.violations = std::min(rises, falls);
    }
    return out;
}

std::string to_string(ProductKind kind) { return kind == ProductKind::Minus ? "MINUS" : "PLUS"; }

ProductKind parse_product_kind(const std::string& text) {
    if (text == "MINUS") return ProductKind::Minus;
    if (text == "PLUS") return ProductKind::Plus;
    throw UsageError("product kind must be MINUS or PLUS (got '" + text + "')");
}

double product_form(ProductKind kind, long n) {
    if (n < 2) {
        throw DomainError("product_form needs n >= 2");
    }
    const double dn = static_cast<double>(n);
    detail::CompensatedSum sum;
    for (long k = 1; k < n; ++k) {
        const double frac = static_cast<double>(k) / dn;
        double log_factor;
        if (kind == ProductKind::Plus) {
            log_factor = std::log1p(frac);
        } else {
            log_factor = 2 * k < n ? std::log1p(-frac) : std::log(static_cast<double>(n - k) / dn);
        }
        sum += log_factor / static_cast<double>(k);
    }
    return sum.value();
}

double product_limit(ProductKind kind) { return kind == ProductKind::Minus ? -kZeta2 : kZeta2 / 2.0; }

std::string to_string(DilogMode mode) { return mode == DilogMode::Series ? "series" : "integral"; }

DilogMode parse_dilog_mode(const std::string& text) {
    if (text == "series") return DilogMode::Series;
    if (text == "integral") return DilogMode::Integral;
    throw UsageError("dilog mode must be series or integral (got '" + text + "')");
}

double dilog_h(double x, double tol) {
    if (!(std::fabs(x) <= 1.0)) {
        throw DomainError("h(x) = int_0^x ln(1-t)/t dt needs |x| <= 1");
    }
    check_tolerance(tol);
    if (x == 0.0) {
        return 0.0;
    }
    // t = x u:  h(x) = int_0^1 ln(1 - x u)/u du
    auto f = [x](double u, double uc) {
        const double arg = x > 0.0 ? (1.0 - x) + x * uc : 1.0;
        const double log_term = arg < 0.5 ? std::log(arg) : std::log1p(-x * u);
        return log_term / u;
    };
    return tanh_sinh(f, tol).value;
}

double functional_eq_dilog(double x, double tol) {
    if (!(std::fabs(x) <= 1.0)) {
        throw DomainError("functional_eq_dilog needs |x| <= 1");
    }
    return std::fabs(dilog_h(x, tol) + dilog_h(-x, tol) - 0.5 * dilog_h(x * x, tol));
}

namespace {

// Stops when the bound on the omitted tail drops below tol.
double dilog_series(double x, double tol) {
    constexpr long kMaxTerms = 100'000'000;
    const double q = 2.0 * x;
    const double aq = std::fabs(q);
    detail::CompensatedSum sum;
    double power = 1.0;
    for (long n = 1; n <= kMaxTerms; ++n) {
        power *= q;
        const double dn = static_cast<double>(n);
        sum += power / (dn * dn);

        if (aq == 1.0 && q > 0.0) {
            // sum_{m>n} 1/m^2 lies in (1/(n+1), 1/n); take the midpoint.
            const double half_width = 0.5 / (dn * (dn + 1.0));
            if (half_width < tol) {
                return sum.value() + 0.5 * (1.0 / dn + 1.0 / (dn + 1.0));
            }
        } else if (aq == 1.0) {
            // Alternating, convex terms: averaging S_n and S_{n+1} leaves at
            // most (c_{n+1} - c_{n+2})/2.
            const double c1 = 1.0 / ((dn + 1.0) * (dn + 1.0));
            const double c2 = 1.0 / ((dn + 2.0) * (dn + 2.0));
            if (0.5 * (c1 - c2) < tol) {
                return sum.value() + 0.5 * power * q * c1;
            }
        } else {
            const double next = std::fabs(power) * aq;
            const double geometric = next / ((dn + 1.0) * (dn + 1.0) * (1.0 - aq));
            const double telescoping = next / dn;
            if (std::min(geometric, telescoping) < tol) {
                return sum.value();
            }
        }
    }
    throw AccuracyError("series for S(x) needs more than 1e8 terms", sum.value(), tol);
}

}  // namespace

double dilog_S(double x, DilogMode mode, double tol) {
    if (!(std::fabs(x) <= 0.5)) {
        throw DomainError("S(x) converges only on [-1/2, 1/2]");
    }
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (mode == DilogMode::Integral) {
        // S(x) = -int_0^x ln(1-2t)/t dt = -h(2x)
        return -dilog_h(2.0 * x, std::max(tol, kMinTolerance));
    }
    return dilog_series(x, tol);
}

double S_prime(double x) {
    if (!(std::fabs(x) < 0.5)) {
        throw DomainError("S'(x) needs |x| < 1/2");
    }
    if (x == 0.0) {
        return 2.0;
    }
    return -std::log1p(-2.0 * x) / x;
}

double ode_residual(double x, unsigned N) {
    if (!(std::fabs(x) < 0.5)) {
        throw DomainError("ode_residual needs |x| < 1/2");
    }
    if (N == 0) {
        throw DomainError("ode_residual needs at least one term");
    }
    // S_N'  = sum_{n=1}^N 2^n x^(n-1) / n       = sum 2 q^(n-1) / n
    // S_N'' = sum_{n=2}^N 2^n (n-1) x^(n-2) / n = sum 4 (n-1) q^(n-2) / n
    const double q = 2.0 * x;
    detail::CompensatedSum first;
    detail::CompensatedSum second;
    double q_pow = 1.0;  // q^(n-1)
    for (unsigned n = 1; n <= N; ++n) {
        const double dn = n;
        first += 2.0 * q_pow / dn;
        if (n >= 2) {
            second += 4.0 * (dn - 1.0) * (q_pow / q) / dn;
        }
        q_pow *= q;
        if (q == 0.0) {
            break;
        }
    }
    return std::fabs(first.value() + x * second.value() - 2.0 / (1.0 - q));
}

double ode_residual_bound(double x, unsigned N) {
    const double aq = std::fabs(2.0 * x);
    return 2.0 * std::pow(aq, static_cast<double>(N)) / (1.0 - aq);
}

double log_ratio_h(double x, double tol) {
    if (!(x > 0.0)) {
        throw DomainError("H(x) = int_1^x ln t/(1+t) dt needs x > 0");
    }
    check_tolerance(tol);
    if (x == 1.0) {
        return 0.0;
    }
    // t = 1 + (x - 1) u = x + (1 - x)(1 - u)
    const double span = x - 1.0;
    auto f = [x, span](double u, double uc) {
        const double t = 1.0 + span * u;
        const double log_t = t < 0.5 ? std::log(x + (1.0 - x) * uc) : std::log1p(span * u);
        return log_t / (1.0 + t);
    };
    return span * tanh_sinh(f, tol).value;
}

double functional_eq_inverse(double x, double tol) {
    if (!(x > 0.0)) {
        throw DomainError("functional_eq_inverse needs x > 0");
    }
    const double lx = std::log(x);
    return std::fabs(log_ratio_h(x, tol) + log_ratio_h(1.0 / x, tol) - 0.5 * lx * lx);
}

LeskoPair lesko_pair(double r, double a, double b, double tol) {
    if (!(r >= -1.0 && r < 1.0)) {
        throw DomainError("lesko_pair needs r in [-1, 1)");
    }
    if (!(a > 0.0)) {
        throw DomainError("lesko_pair needs a > 0");
    }
    if (!(b >= 0.0)) {
        throw DomainError("lesko_pair needs b >= 0");
    }
    check_tolerance(tol);

    LeskoPair out;
    constexpr long kMaxTerms = 100'000'000;
    const double ar = std::fabs(r);
    detail::CompensatedSum sum;
    double power = 1.0;
    bool done = r == 0.0;
    for (long n = 1; !done; ++n) {
        if (n > kMaxTerms) {
            throw AccuracyError("Lesko series needs more than 1e8 terms", sum.value(), tol);
        }
        power *= r;
        const double dn = static_cast<double>(n);
        sum += power / (a * dn + b);
        out.series_terms = static_cast<std::size_t>(n);
        if (ar == 1.0) {
            // r = -1: average of consecutive partial sums, convex decreasing terms
            const double c1 = 1.0 / (a * (dn + 1.0) + b);
            const double c2 = 1.0 / (a * (dn + 2.0) + b);
            if (0.5 * (c1 - c2) < tol) {
                sum += 0.5 * power * r * c1;
                done = true;
            }
        } else if (std::fabs(power) * ar / ((a * dn + b) * (1.0 - ar)) < tol) {
            done = true;
        }
    }
    out.series_value = sum.value();

    const double exponent = b / a;
    auto f = [r, exponent](double u, double uc) {
        const double denom = r > 0.0 ? (1.0 - r) + r * uc : 1.0 - r * u;
        const double weight = exponent == 0.0 ? 1.0 : std::pow(u, exponent);
        return r * weight / denom;
    };
    out.integral_value = tanh_sinh(f, tol).value / a;
    return out;
}

}  // namespace basel
