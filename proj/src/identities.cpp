#include "basel/identities.hpp"

#include "basel/errors.hpp"
#include "basel/sequences.hpp"

#include <utility>

namespace basel {
namespace {

std::string with_n(const std::string& name, unsigned long n) {
    return name + "(n=" + std::to_string(n) + ")";
}

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

}  // namespace

RationalPolynomial bernoulli_polynomial(unsigned long n) {
    const auto b = SequenceCache::global().bernoulli_table(n);
    std::vector<Rational> coefficients(n + 1);
    for (unsigned long k = 0; k <= n; ++k) {
        coefficients[k] = Rational(binomial(n, k)) * b[n - k];
    }
    return RationalPolynomial(std::move(coefficients));
}

RationalPolynomial genocchi_polynomial(unsigned long n) {
    const auto g = SequenceCache::global().genocchi_table(n);
    std::vector<Rational> coefficients(n + 1);
    for (unsigned long k = 0; k <= n; ++k) {
        coefficients[k] = Rational(binomial(n, k)) * g[n - k];
    }
    return RationalPolynomial(std::move(coefficients));
}

RationalPolynomial genocchi_polynomial_reversed(unsigned long n) {
    const auto g = SequenceCache::global().genocchi_table(n);
    RationalPolynomial out;
    for (unsigned long k = 0; k <= n; ++k) {
        out += RationalPolynomial::monomial(Rational(binomial(n, k)) * g[k], n - k);
    }
    return out;
}

Certificate compare_polynomials(std::string identity, const RationalPolynomial& lhs,
                                const RationalPolynomial& rhs) {
    Certificate cert;
    cert.identity = std::move(identity);
    cert.lhs = lhs.to_string();
    cert.rhs = rhs.to_string();
    const std::size_t len = std::max(lhs.coefficients().size(), rhs.coefficients().size());
    for (std::size_t i = 0; i < len; ++i) {
        const Rational diff = abs(lhs.coefficient(i) - rhs.coefficient(i));
        if (diff.is_zero()) {
            continue;
        }
        if (!cert.first_difference) {
            cert.first_difference = i;
        }
        if (diff > cert.max_abs_deviation) {
            cert.max_abs_deviation = diff;
        }
    }
    cert.pass = !cert.first_difference.has_value();
    return cert;
}

Certificate compare_values(std::string identity, const Rational& lhs, const Rational& rhs) {
    Certificate cert;
    cert.identity = std::move(identity);
    cert.lhs = lhs.to_string();
    cert.rhs = rhs.to_string();
    cert.max_abs_deviation = abs(lhs - rhs);
    cert.pass = cert.max_abs_deviation.is_zero();
    return cert;
}

Certificate check_reflection(unsigned long n) {
    const auto g = genocchi_polynomial(n);
    const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
    return compare_polynomials(with_n("reflection", n), g.compose_affine(-1, 1), sign * g);
}

std::string to_string(HalvingVariant v) {
    switch (v) {
        case HalvingVariant::ii:
            return "ii";
        case HalvingVariant::iii:
            return "iii";
        case HalvingVariant::iv:
            return "iv";
    }
    return "?";
}

HalvingVariant parse_halving_variant(const std::string& text) {
    if (text == "ii") return HalvingVariant::ii;
    if (text == "iii") return HalvingVariant::iii;
    if (text == "iv") return HalvingVariant::iv;
    throw UsageError("halving variant must be one of ii, iii, iv (got '" + text + "')");
}

Certificate check_halving(unsigned long n, HalvingVariant variant) {
    const auto b = bernoulli_polynomial(n);
    const auto b_half = b.compose_affine(kHalf, 0);          // B_n(x/2)
    const auto b_half_up = b.compose_affine(kHalf, kHalf);   // B_n((x+1)/2)
    const Rational two_n = pow2(static_cast<long>(n));
    const std::string id = with_n("halving_" + to_string(variant), n);
    switch (variant) {
        case HalvingVariant::ii:
            return compare_polynomials(id, genocchi_polynomial(n), b - two_n * b_half);
        case HalvingVariant::iii:
            return compare_polynomials(id, genocchi_polynomial(n), two_n * b_half_up - b);
        case HalvingVariant::iv:
            return compare_polynomials(id, b, pow2(static_cast<long>(n) - 1) * (b_half_up + b_half));
    }
    throw DomainError("unknown halving variant");
}

Certificate check_addition_recurrence(unsigned long k) {
    if (k < 2) {
        throw DomainError("addition recurrence holds for k >= 2");
    }
    const auto g = genocchi_polynomial(k);
    return compare_polynomials("addition_recurrence(k=" + std::to_string(k) + ")",
                               g.compose_affine(1, 1) + g,
                               RationalPolynomial::monomial(Rational(static_cast<long>(k)), k - 1));
}

Certificate power_sum_check(unsigned long k, unsigned long n) {
    if (k < 2 || n < 1) {
        throw DomainError("power_sum_check needs k >= 2 and n >= 1");
    }
    const auto g = genocchi_polynomial(k);
    Rational middle;
    for (unsigned long i = 2; i <= n; ++i) {
        middle += g(Rational(static_cast<long>(i)));
    }
    const Rational lhs = g(Rational(1)) + 2 * middle + g(Rational(static_cast<long>(n + 1)));
    Rational sum;
    for (unsigned long i = 1; i <= n; ++i) {
        sum += pow(Rational(static_cast<long>(i)), static_cast<long>(k - 1));
    }
    return compare_values("power_sum(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")", lhs,
                          Rational(static_cast<long>(k)) * sum);
}

Certificate check_g_at_one(unsigned long n) {
    if (n < 2) {
        throw DomainError("G_n(1) = -G_n holds for n >= 2");
    }
    return compare_values(with_n("g_at_one", n), genocchi_polynomial(n)(Rational(1)), -genocchi(n));
}

Certificate check_genocchi_orderings(unsigned long n) {
    return compare_polynomials(with_n("genocchi_orderings", n), genocchi_polynomial(n),
                               genocchi_polynomial_reversed(n));
}

CertificateBundle check_special_values(unsigned long n) {
    if (n < 1) {
        throw DomainError("special values are checked for n >= 1");
    }
    const long ln = static_cast<long>(n);
    const auto b_n = bernoulli_polynomial(n);
    const auto b_2n = bernoulli_polynomial(2 * n);
    const auto g_2n = genocchi_polynomial(2 * n);
    const Rational bn = bernoulli(n);
    const Rational b2n = bernoulli(2 * n);

    CertificateBundle out;
    out.push_back(compare_values(with_n("b2n_half_vs_quarter", n), b_2n(kHalf),
                                 pow(Rational(4), ln) * b_2n(kQuarter)));
    out.push_back(compare_values(with_n("g2n_half_zero", n), g_2n(kHalf), Rational(0)));
    out.push_back(compare_values(with_n("bn_half", n), b_n(kHalf), (pow2(1 - ln) - 1) * bn));
    out.push_back(compare_values(with_n("b2n_quarter", n), b_2n(kQuarter),
                                 pow2(-2 * ln) * (pow2(1 - 2 * ln) - 1) * b2n));
    out.push_back(compare_values(with_n("gn_from_bn", n), genocchi(n), (1 - pow2(ln)) * bn));
    return out;
}

CertificateBundle check_calculus(unsigned long n) {
    if (n < 1) {
        throw DomainError("calculus relations are checked for n >= 1");
    }
    const auto g = genocchi_polynomial(n);
    CertificateBundle out;
    out.push_back(compare_polynomials(with_n("derivative", n), g.derivative(),
                                      Rational(static_cast<long>(n)) * genocchi_polynomial(n - 1)));
    out.push_back(compare_values(with_n("unit_integral", n), g.integral_unit(),
                                 Rational(-2) * genocchi(n + 1) / Rational(static_cast<long>(n + 1))));
    return out;
}

}  // namespace basel
