#pragma once

/**
 * @file identities.hpp
 * @brief Bernoulli / Genocchi polynomials and exact identity certificates.
 *
 *   z e^{xz}/(e^z - 1) = sum B_n(x) z^n/n!
 *   z e^{xz}/(e^z + 1) = sum G_n(x) z^n/n!
 *
 * Every check compares two exact objects (polynomials coefficient-wise, or
 * rationals). A certificate passes only on exact equality; on failure it
 * records the first coefficient index that differs.
 */

#include "basel/polynomial.hpp"
#include "basel/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace basel {

struct Certificate {
    std::string identity;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    /// Largest |lhs_i - rhs_i| over all coefficients (zero on pass).
    Rational max_abs_deviation;
    /// Lowest coefficient index where the sides differ (polynomial checks only).
    std::optional<std::size_t> first_difference;
};

using CertificateBundle = std::vector<Certificate>;

/// B_n(x) = sum_k C(n,k) B_{n-k} x^k
RationalPolynomial bernoulli_polynomial(unsigned long n);

/// G_n(x) = sum_k C(n,k) G_{n-k} x^k
RationalPolynomial genocchi_polynomial(unsigned long n);

/// Same polynomial built from the other ordering, sum_k C(n,k) G_k x^{n-k}.
RationalPolynomial genocchi_polynomial_reversed(unsigned long n);

Certificate compare_polynomials(std::string identity, const RationalPolynomial& lhs,
                                const RationalPolynomial& rhs);
Certificate compare_values(std::string identity, const Rational& lhs, const Rational& rhs);

/// G_n(1 - x) = (-1)^(n+1) G_n(x)
Certificate check_reflection(unsigned long n);

enum class HalvingVariant {
    ii,   // G_n(x) = B_n(x) - 2^n B_n(x/2)
    iii,  // G_n(x) = 2^n B_n((x+1)/2) - B_n(x)
    iv,   // B_n(x) = 2^(n-1) [B_n((x+1)/2) + B_n(x/2)]
};

std::string to_string(HalvingVariant v);
/// "ii" | "iii" | "iv"; DomainError otherwise.
HalvingVariant parse_halving_variant(const std::string& text);

Certificate check_halving(unsigned long n, HalvingVariant variant);

/// G_k(x + 1) + G_k(x) = k x^(k-1); DomainError for k < 2.
Certificate check_addition_recurrence(unsigned long k);

/// G_k(1) + 2 sum_{i=2}^{n} G_k(i) + G_k(n+1) = k sum_{i=1}^{n} i^(k-1).
/// DomainError unless k >= 2 and n >= 1.
Certificate power_sum_check(unsigned long k, unsigned long n);

/// G_n(1) = -G_n; DomainError for n < 2.
Certificate check_g_at_one(unsigned long n);

/// Both orderings of the G_n(x) expansion give the same polynomial.
Certificate check_genocchi_orderings(unsigned long n);

/// For n >= 1:
///   B_2n(1/2) = 4^n B_2n(1/4)
///   G_2n(1/2) = 0
///   B_n(1/2)  = (2^(1-n) - 1) B_n
///   B_2n(1/4) = 2^(-2n) (2^(1-2n) - 1) B_2n
///   G_n       = (1 - 2^n) B_n
CertificateBundle check_special_values(unsigned long n);

/// For n >= 1: G_n'(x) = n G_{n-1}(x) and the [0,1] integral of G_n equals
/// -2 G_{n+1}/(n+1).
CertificateBundle check_calculus(unsigned long n);

}  // namespace basel
