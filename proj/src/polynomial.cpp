#include "basel/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace basel {

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coefficients)
    : coefficients_(coefficients) {
    normalize();
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    normalize();
}

RationalPolynomial RationalPolynomial::monomial(Rational c, std::size_t k) {
    std::vector<Rational> coefficients(k + 1);
    coefficients[k] = std::move(c);
    return RationalPolynomial(std::move(coefficients));
}

void RationalPolynomial::normalize() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) {
        coefficients_.pop_back();
    }
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Rational();
}

// Horner
Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial out = *this;
    for (auto& c : out.coefficients_) {
        c = -c;
    }
    return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
    if (coefficients_.size() < rhs.coefficients_.size()) {
        coefficients_.resize(rhs.coefficients_.size());
    }
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
        coefficients_[i] += rhs.coefficients_[i];
    }
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
    return *this += -rhs;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    for (auto& c : coefficients_) {
        c *= scalar;
    }
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            out[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return RationalPolynomial(std::move(out));
}

// sum_i c_i (a x + b)^i = sum_i c_i sum_j C(i, j) a^j b^(i-j) x^j
RationalPolynomial RationalPolynomial::compose_affine(const Rational& a, const Rational& b) const {
    const std::size_t n = coefficients_.size();
    if (n == 0) {
        return {};
    }
    std::vector<Rational> a_pow(n, Rational(1));
    std::vector<Rational> b_pow(n, Rational(1));
    for (std::size_t k = 1; k < n; ++k) {
        a_pow[k] = a_pow[k - 1] * a;
        b_pow[k] = b_pow[k - 1] * b;
    }
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coefficients_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= i; ++j) {
            out[j] += coefficients_[i] * Rational(binomial(i, j)) * a_pow[j] * b_pow[i - j];
        }
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coefficients_.size() <= 1) {
        return {};
    }
    std::vector<Rational> out(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k) {
        out[k - 1] = coefficients_[k] * Rational(static_cast<long>(k));
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::antiderivative() const {
    if (coefficients_.empty()) {
        return {};
    }
    std::vector<Rational> out(coefficients_.size() + 1);
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        out[k + 1] = coefficients_[k] / Rational(static_cast<long>(k + 1));
    }
    return RationalPolynomial(std::move(out));
}

Rational RationalPolynomial::integral_unit() const { return antiderivative()(Rational(1)); }

std::vector<std::string> RationalPolynomial::to_strings() const {
    if (coefficients_.empty()) {
        return {"0"};
    }
    std::vector<std::string> out;
    out.reserve(coefficients_.size());
    for (const auto& c : coefficients_) {
        out.push_back(c.to_string());
    }
    return out;
}

std::string RationalPolynomial::to_string() const {
    if (coefficients_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        const Rational& c = coefficients_[i];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = abs(c);
        if (out.empty()) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit) {
            out += mag.to_string();
        }
        if (i >= 1) {
            out += (i == 0 || unit) ? "x" : "*x";
            if (i > 1) {
                out += "^" + std::to_string(i);
            }
        }
    }
    return out;
}

}  // namespace basel
