#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals and exact multiples of even powers of pi.
 *
 * Rational is a value type over GMP's mpq_t. Every constructor leaves the
 * value canonical (gcd(|p|, q) = 1, q > 0, zero stored as 0/1), so two
 * Rationals compare equal iff their numerators and denominators are equal.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <string_view>

namespace basel {

class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT: implicit from integers is intended
    Rational(int value) : q_(static_cast<long>(value)) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class& value) : q_(value) {}
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "p/q" or "p". Throws DomainError on malformed input or q = 0.
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }

    /// "p/q", or "p" when q = 1.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_{0};

    friend Rational abs(const Rational& x);
    friend Rational pow(const Rational& base, long exponent);
};

Rational abs(const Rational& x);

/// Integer power; negative exponents invert (DomainError for 0^-k).
Rational pow(const Rational& base, long exponent);

/// 2^k as an exact rational, k may be negative.
Rational pow2(long exponent);

/// n! as an exact integer.
mpz_class factorial(unsigned long n);

/// C(n, k) as an exact integer (0 when k > n).
mpz_class binomial(unsigned long n, unsigned long k);

/// coefficient * pi^exponent with an even, non-negative exponent.
class PiPower {
public:
    PiPower(Rational coefficient, unsigned exponent);

    const Rational& coefficient() const& { return coefficient_; }
    Rational coefficient() && { return std::move(coefficient_); }
    unsigned exponent() const { return exponent_; }

    /// Nearest-double evaluation (long double intermediate).
    double to_double() const;

    /// Human form, e.g. "1/6·π²".
    std::string to_string() const;

    friend bool operator==(const PiPower&, const PiPower&) = default;

private:
    Rational coefficient_;
    unsigned exponent_;
};

}  // namespace basel
