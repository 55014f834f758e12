#include "basel/series.hpp"

#include "basel/detail/summation.hpp"
#include "basel/errors.hpp"
#include "basel/quadrature.hpp"
#include "basel/sequences.hpp"

#include <mpfr.h>

#include <cmath>
#include <numbers>

namespace basel {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr mpfr_prec_t kGapPrecision = 256;

class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, kGapPrecision); }
    ~BigFloat() { mpfr_clear(v_); }
    BigFloat(const BigFloat&) = delete;
    BigFloat& operator=(const BigFloat&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

void check_partial_n(unsigned long N) {
    if (N == 0) {
        throw DomainError("partial sums need N >= 1");
    }
    if (N > kExactPartialSumCap) {
        throw CapacityError("exact partial sums are capped at N = 10000; use the float view");
    }
}

Rational inverse_square(unsigned long n) {
    const mpz_class m(n);
    return Rational(mpz_class(1), m * m);
}

// pi^2 / divisor at kGapPrecision bits
void pi_squared_over(BigFloat& out, unsigned long divisor) {
    mpfr_const_pi(out.get(), MPFR_RNDN);
    mpfr_sqr(out.get(), out.get(), MPFR_RNDN);
    mpfr_div_ui(out.get(), out.get(), divisor, MPFR_RNDN);
}

}  // namespace

Rational zeta2_partial(unsigned long N) {
    check_partial_n(N);
    Rational sum;
    for (unsigned long n = 1; n <= N; ++n) {
        sum += inverse_square(n);
    }
    return sum;
}

Rational eta2_partial(unsigned long N) {
    check_partial_n(N);
    Rational sum;
    for (unsigned long n = 1; n <= N; ++n) {
        if (n % 2 == 1) {
            sum += inverse_square(n);
        } else {
            sum -= inverse_square(n);
        }
    }
    return sum;
}

// Summed from the small end so the float view is as accurate as binary64 allows.
double zeta2_partial_float(unsigned long N) {
    if (N == 0) {
        throw DomainError("partial sums need N >= 1");
    }
    detail::CompensatedSum sum;
    for (unsigned long n = N; n >= 1; --n) {
        const double dn = static_cast<double>(n);
        sum += 1.0 / (dn * dn);
    }
    return sum.value();
}

double eta2_partial_float(unsigned long N) {
    if (N == 0) {
        throw DomainError("partial sums need N >= 1");
    }
    detail::CompensatedSum sum;
    for (unsigned long n = N; n >= 1; --n) {
        const double dn = static_cast<double>(n);
        sum += (n % 2 == 1 ? 1.0 : -1.0) / (dn * dn);
    }
    return sum.value();
}

TailGap zeta2_tail_gap(unsigned long N) {
    const Rational partial = zeta2_partial(N);
    BigFloat gap;
    BigFloat s;
    pi_squared_over(gap, 6);
    mpfr_set_q(s.get(), partial.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sub(gap.get(), gap.get(), s.get(), MPFR_RNDN);

    BigFloat bound;
    mpfr_set_ui(bound.get(), 1, MPFR_RNDN);
    mpfr_div_ui(bound.get(), bound.get(), N, MPFR_RNDN);

    TailGap out;
    out.gap = mpfr_get_d(gap.get(), MPFR_RNDN);
    out.bound = mpfr_get_d(bound.get(), MPFR_RNDN);
    out.within = mpfr_sgn(gap.get()) > 0 && mpfr_less_p(gap.get(), bound.get());
    return out;
}

TailGap eta2_tail_gap(unsigned long N) {
    const Rational partial = eta2_partial(N);
    BigFloat gap;
    BigFloat s;
    pi_squared_over(gap, 12);
    mpfr_set_q(s.get(), partial.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sub(gap.get(), gap.get(), s.get(), MPFR_RNDN);

    BigFloat bound;
    mpfr_set_ui(bound.get(), 1, MPFR_RNDN);
    mpfr_div_ui(bound.get(), bound.get(), N + 1, MPFR_RNDN);
    mpfr_div_ui(bound.get(), bound.get(), N + 1, MPFR_RNDN);

    TailGap out;
    out.gap = mpfr_get_d(gap.get(), MPFR_RNDN);
    out.bound = mpfr_get_d(bound.get(), MPFR_RNDN);
    out.within = mpfr_cmpabs(gap.get(), bound.get()) < 0;
    return out;
}

namespace {

// 1/sin^2 y - 1/y^2 without cancellation for small |y|.
double csc2_minus_inverse_square(double y) {
    const double ay = std::fabs(y);
    if (ay < 0.1) {
        const double y2 = y * y;
        // 1/3 + y^2/15 + 2y^4/189 + y^6/675 + 2y^8/10395
        return 1.0 / 3.0 + y2 * (1.0 / 15.0 + y2 * (2.0 / 189.0 + y2 * (1.0 / 675.0 + y2 * (2.0 / 10395.0))));
    }
    const double s = std::sin(y);
    return 1.0 / (s * s) - 1.0 / (y * y);
}

}  // namespace

MeiReport mei_bisection(double x, unsigned level, unsigned long truncation) {
    if (!(x > 1e-9 && x < kPi - 1e-9)) {
        throw DomainError("mei_bisection needs x in (0, pi), away from the poles");
    }
    if (level > 20) {
        throw DomainError("mei_bisection level must be <= 20");
    }
    if (truncation == 0) {
        throw DomainError("partial-fraction truncation must be positive");
    }

    MeiReport out;
    out.x = x;
    out.level = level;
    out.truncation = truncation;
    const double scale = std::ldexp(1.0, -static_cast<int>(level));  // 2^-n
    const long count = 1L << level;

    const double sx = std::sin(x);
    out.exact_value = 1.0 / (sx * sx);

    detail::CompensatedSum bisection;
    for (long k = 0; k < count; ++k) {
        const double s = std::sin((static_cast<double>(k) * kPi + x) * scale);
        bisection += 1.0 / (s * s);
    }
    out.bisection_value = bisection.value() * scale * scale;

    // Centred range k = -2^(n-1) .. 2^(n-1)-1 (just k = 0 at level 0).
    const long lo = level == 0 ? 0 : -(count / 2);
    const long hi = level == 0 ? 0 : count / 2 - 1;
    detail::CompensatedSum remainder;
    detail::CompensatedSum centered;
    for (long k = lo; k <= hi; ++k) {
        const double shifted = x + static_cast<double>(k) * kPi;
        remainder += csc2_minus_inverse_square(shifted * scale);
        centered += 1.0 / (shifted * shifted);
    }
    out.e_n = remainder.value() * scale * scale;
    out.centered_sum = centered.value();
    out.e_n_bound = scale;

    detail::CompensatedSum fraction;
    for (unsigned long k = truncation; k >= 1; --k) {
        const double kp = static_cast<double>(k) * kPi;
        fraction += 1.0 / ((x + kp) * (x + kp));
        fraction += 1.0 / ((x - kp) * (x - kp));
    }
    fraction += 1.0 / (x * x);
    out.partial_fraction_tail = 2.0 / (kPi * kPi * static_cast<double>(truncation));
    fraction += out.partial_fraction_tail;
    out.partial_fraction_value = fraction.value();
    return out;
}

std::string to_string(Proposition which) { return which == Proposition::PropB ? "PROP_B" : "PROP_G"; }

Proposition parse_proposition(const std::string& text) {
    if (text == "PROP_B") return Proposition::PropB;
    if (text == "PROP_G") return Proposition::PropG;
    throw UsageError("proposition must be PROP_B or PROP_G (got '" + text + "')");
}

double regularized_target(Proposition which, double tol) {
    if (which == Proposition::PropB) {
        return -integrate(IntegralKind::LogOver1mt, tol).value - 1.5;
    }
    return -integrate(IntegralKind::LogOver1pt, tol).value;
}

SeriesReport asymptotic_report(Proposition which, unsigned long m_max, double tol) {
    if (m_max < 1 || m_max > kMaxAsymptoticTerms) {
        throw CapacityError("asymptotic_report needs 1 <= m_max <= 40");
    }
    SeriesReport out;
    out.which = which;
    out.regularized_target = regularized_target(which, tol);
    out.classically_convergent = false;

    Rational running;
    for (unsigned long n = 1; n <= m_max; ++n) {
        Rational term;
        if (which == Proposition::PropB) {
            // (-1)^(n-1) script_b(n) = B_2n
            term = bernoulli(2 * n);
        } else {
            const Rational g = genocchi(n);
            term = n % 2 == 1 ? g : -g;
        }
        running += term;
        out.term_values.push_back(term.to_double());
        out.partial_sum_values.push_back(running.to_double());
        out.terms.push_back(std::move(term));
        out.partial_sums.push_back(running);
    }

    // Odd-index Genocchi terms vanish identically; they are not candidates.
    std::size_t best = 0;
    for (std::size_t i = 0; i < out.terms.size(); ++i) {
        if (out.terms[i].is_zero()) {
            continue;
        }
        if (best == 0 || abs(out.terms[i]) <= abs(out.terms[best - 1])) {
            best = i + 1;
        }
    }
    if (best == 0) {
        throw DomainError("asymptotic_report: every computed term is zero");
    }
    out.smallest_term_index = best;
    out.smallest_term = std::fabs(out.term_values[best - 1]);
    const double before = best >= 2 ? out.partial_sum_values[best - 2] : 0.0;
    const double after = out.partial_sum_values[best - 1];
    out.optimal_estimate = before;
    out.bracket_average = 0.5 * (before + after);

    out.best_truncation_error = std::fabs(out.partial_sum_values.front() - out.regularized_target);
    for (double s : out.partial_sum_values) {
        out.best_truncation_error = std::min(out.best_truncation_error, std::fabs(s - out.regularized_target));
    }
    return out;
}

RemarkConstants remark_constants(const Rational& b1, const Rational& g1, double tol) {
    const double target = regularized_target(Proposition::PropG, tol);
    return {target + b1.to_double(), g1.to_double() - target};
}

}  // namespace basel
