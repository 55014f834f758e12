#include "basel/rational.hpp"

#include "basel/errors.hpp"

#include <cmath>
#include <numbers>

namespace basel {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    mpz_class num;
    mpz_class den = 1;
    auto parse_int = [](std::string_view s, mpz_class& out) {
        if (s.empty() || out.set_str(std::string(s), 10) != 0) {
            throw DomainError("malformed rational: '" + std::string(s) + "'");
        }
    };
    if (slash == std::string_view::npos) {
        parse_int(text, num);
    } else {
        parse_int(text.substr(0, slash), num);
        parse_int(text.substr(slash + 1), den);
    }
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DomainError("division by zero rational");
    }
    q_ /= rhs.q_;
    return *this;
}

Rational abs(const Rational& x) { return Rational(mpq_class(::abs(x.q_))); }

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) {
            throw DomainError("zero raised to a negative power");
        }
        return Rational(1) / pow(base, -exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    // already coprime
    mpq_class q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    return Rational(std::move(q));
}

Rational pow2(long exponent) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) {
        return 0;
    }
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

PiPower::PiPower(Rational coefficient, unsigned exponent)
    : coefficient_(std::move(coefficient)), exponent_(exponent) {
    if (exponent_ % 2 != 0) {
        throw DomainError("PiPower exponent must be even");
    }
}

double PiPower::to_double() const {
    // mpq -> long double loses nothing relevant for the exponents we use
    const long double c = static_cast<long double>(coefficient_.numerator().get_d()) /
                          static_cast<long double>(coefficient_.denominator().get_d());
    if (!std::isfinite(static_cast<double>(c)) || c == 0.0L) {
        // huge numerator/denominator: fall back to mpq's own conversion
        return coefficient_.to_double() * std::pow(std::numbers::pi, exponent_);
    }
    return static_cast<double>(c * std::pow(std::numbers::pi_v<long double>, exponent_));
}

std::string PiPower::to_string() const {
    static constexpr const char* superscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out = coefficient_.to_string();
    if (exponent_ == 0) {
        return out;
    }
    out += "·π";
    for (char digit : std::to_string(exponent_)) {
        out += superscripts[digit - '0'];
    }
    return out;
}

}  // namespace basel
