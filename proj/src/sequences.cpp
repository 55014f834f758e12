#include "basel/sequences.hpp"

#include "basel/errors.hpp"

#include <string>

namespace basel {
namespace {

// C(m, .) -> C(m + 1, .) in place.
void advance_pascal_row(std::vector<mpz_class>& row) {
    row.push_back(1);
    for (std::size_t k = row.size() - 2; k >= 1; --k) {
        row[k] += row[k - 1];
    }
}

}  // namespace

SequenceCache::SequenceCache(unsigned long cap) : cap_(cap) {
    bernoulli_.values = {Rational(1)};
    bernoulli_.row = {1, 2, 1};
    genocchi_.values = {Rational(0), Rational(1, 2)};
    genocchi_.row = {1, 2, 1};
}

SequenceCache& SequenceCache::global() {
    static SequenceCache cache;
    return cache;
}

void SequenceCache::check_cap(unsigned long n) const {
    if (n > cap_) {
        throw CapacityError("sequence index " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap_));
    }
}

// B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
void SequenceCache::extend_bernoulli(unsigned long n) {
    auto& values = bernoulli_.values;
    auto& row = bernoulli_.row;
    while (values.size() <= n) {
        const unsigned long m = values.size();
        if (m > 1 && m % 2 == 1) {
            values.emplace_back(0);
        } else {
            Rational sum;
            for (unsigned long k = 0; k < m; ++k) {
                if (k > 1 && k % 2 == 1) {
                    continue;
                }
                sum += Rational(row[k]) * values[k];
            }
            values.push_back(-sum / Rational(static_cast<long>(m + 1)));
        }
        advance_pascal_row(row);
    }
}

// G_n = -1/2 * sum_{k<n} C(n, k) G_k   (n > 1)
void SequenceCache::extend_genocchi(unsigned long n) {
    auto& values = genocchi_.values;
    auto& row = genocchi_.row;
    while (values.size() <= n) {
        const unsigned long m = values.size();
        if (m % 2 == 1) {
            values.emplace_back(0);
        } else {
            Rational sum;
            for (unsigned long k = 1; k < m; ++k) {
                if (k > 1 && k % 2 == 1) {
                    continue;
                }
                sum += Rational(row[k]) * values[k];
            }
            values.push_back(-sum / Rational(2));
        }
        advance_pascal_row(row);
    }
}

Rational SequenceCache::bernoulli(unsigned long n) {
    check_cap(n);
    {
        std::shared_lock lock(bernoulli_.mutex);
        if (n < bernoulli_.values.size()) {
            return bernoulli_.values[n];
        }
    }
    std::unique_lock lock(bernoulli_.mutex);
    extend_bernoulli(n);
    return bernoulli_.values[n];
}

Rational SequenceCache::genocchi(unsigned long n) {
    check_cap(n);
    {
        std::shared_lock lock(genocchi_.mutex);
        if (n < genocchi_.values.size()) {
            return genocchi_.values[n];
        }
    }
    std::unique_lock lock(genocchi_.mutex);
    extend_genocchi(n);
    return genocchi_.values[n];
}

std::vector<Rational> SequenceCache::bernoulli_table(unsigned long n) {
    bernoulli(n);
    std::shared_lock lock(bernoulli_.mutex);
    return {bernoulli_.values.begin(), bernoulli_.values.begin() + static_cast<long>(n + 1)};
}

std::vector<Rational> SequenceCache::genocchi_table(unsigned long n) {
    genocchi(n);
    std::shared_lock lock(genocchi_.mutex);
    return {genocchi_.values.begin(), genocchi_.values.begin() + static_cast<long>(n + 1)};
}

Rational bernoulli(unsigned long n) { return SequenceCache::global().bernoulli(n); }

Rational genocchi(unsigned long n) { return SequenceCache::global().genocchi(n); }

Rational genocchi_from_bernoulli(unsigned long n) {
    return -(pow2(static_cast<long>(n)) - 1) * bernoulli(n);
}

Rational bernoulli_from_genocchi(unsigned long n) {
    if (n == 0) {
        throw DomainError("bernoulli_from_genocchi(0): 1 - 2^0 is zero");
    }
    return genocchi(n) / (1 - pow2(static_cast<long>(n)));
}

Rational script_b(unsigned long n) {
    if (n == 0) {
        throw DomainError("script_b is defined for n >= 1");
    }
    const Rational b = bernoulli(2 * n);
    return n % 2 == 1 ? b : -b;
}

Rational script_g(unsigned long n) {
    if (n == 0) {
        throw DomainError("script_g is defined for n >= 1");
    }
    const Rational g = genocchi(2 * n);
    return n % 2 == 1 ? g : -g;
}

PiPower zeta_even_exact(unsigned long n) {
    if (n == 0) {
        throw DomainError("zeta_even_exact is defined for n >= 1");
    }
    Rational coefficient = pow2(static_cast<long>(2 * n - 1)) * script_b(n) /
                           Rational(factorial(2 * n));
    return PiPower(std::move(coefficient), static_cast<unsigned>(2 * n));
}

Rational term_log_integral(unsigned long n) {
    const mpz_class m = mpz_class(n) + 1;
    return Rational(mpz_class(-1), m * m);
}

Rational signed_factorial_integral(unsigned long k) {
    Rational f(factorial(k));
    return k % 2 == 0 ? f : -f;
}

}  // namespace basel
