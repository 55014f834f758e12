#pragma once

#include "basel/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace basel {

/// Dense polynomial over Rational, coefficients()[i] multiplies x^i.
/// Trailing zero coefficients are always stripped; the zero polynomial has
/// no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    RationalPolynomial(std::initializer_list<Rational> coefficients);
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    /// c * x^k
    static RationalPolynomial monomial(Rational c, std::size_t k);

    const std::vector<Rational>& coefficients() const { return coefficients_; }

    /// Coefficient of x^k (zero past the degree).
    Rational coefficient(std::size_t k) const;

    bool is_zero() const { return coefficients_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coefficients_.size()) - 1; }

    Rational operator()(const Rational& x) const;

    RationalPolynomial operator-() const;
    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const Rational& scalar);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
    friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    /// p(a*x + b), expanded exactly with binomial coefficients.
    RationalPolynomial compose_affine(const Rational& a, const Rational& b) const;

    RationalPolynomial derivative() const;
    /// Antiderivative with zero constant term.
    RationalPolynomial antiderivative() const;
    /// Integral over [0, 1].
    Rational integral_unit() const;

    /// JSON-ready strings, constant term first; zero polynomial -> {"0"}.
    std::vector<std::string> to_strings() const;
    /// Readable form, e.g. "x^2 - x + 1/6".
    std::string to_string() const;

private:
    void normalize();

    std::vector<Rational> coefficients_;
};

}  // namespace basel
