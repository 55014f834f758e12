#pragma once

/**
 * @file sequences.hpp
 * @brief Bernoulli and Genocchi numbers, even zeta values, and a few exact
 * auxiliary integrals.
 *
 * Conventions (generating functions):
 *   z/(e^z - 1) = sum B_n z^n/n!   so B_1 = -1/2
 *   z/(e^z + 1) = sum G_n z^n/n!   so G_1 = +1/2
 * Under these, G_n = -(2^n - 1) B_n for every n >= 0.
 *
 * Both sequences are computed by their own O(n^2) recursions and memoized
 * in a process-wide SequenceCache. Entries are write-once; readers may run
 * concurrently with each other and with a writer extending the table.
 */

#include "basel/rational.hpp"

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace basel {

/// Default largest index either recursion will compute.
inline constexpr unsigned long kDefaultSequenceCap = 5000;

class SequenceCache {
public:
    explicit SequenceCache(unsigned long cap = kDefaultSequenceCap);

    SequenceCache(const SequenceCache&) = delete;
    SequenceCache& operator=(const SequenceCache&) = delete;

    /// B_n; CapacityError if n exceeds the cap.
    Rational bernoulli(unsigned long n);
    /// G_n; CapacityError if n exceeds the cap.
    Rational genocchi(unsigned long n);

    /// B_0..B_n in one lock acquisition.
    std::vector<Rational> bernoulli_table(unsigned long n);
    std::vector<Rational> genocchi_table(unsigned long n);

    unsigned long cap() const { return cap_; }

    /// The cache shared by the free functions below.
    static SequenceCache& global();

private:
    struct Table {
        std::vector<Rational> values;
        // Pascal row C(m, 0..m) for the next m the recursion needs.
        std::vector<mpz_class> row;
        mutable std::shared_mutex mutex;
    };

    void check_cap(unsigned long n) const;
    void extend_bernoulli(unsigned long n);
    void extend_genocchi(unsigned long n);

    unsigned long cap_;
    Table bernoulli_;
    Table genocchi_;
};

Rational bernoulli(unsigned long n);
Rational genocchi(unsigned long n);

/// G_n = -(2^n - 1) B_n.
Rational genocchi_from_bernoulli(unsigned long n);

/// B_n = G_n / (1 - 2^n); DomainError for n = 0.
Rational bernoulli_from_genocchi(unsigned long n);

/// (-1)^(n-1) B_{2n}, positive for every n >= 1. DomainError for n = 0.
Rational script_b(unsigned long n);

/// (-1)^(n-1) G_{2n} = -(4^n - 1) script_b(n). DomainError for n = 0.
Rational script_g(unsigned long n);

/// zeta(2n) = 2^(2n-1) script_b(n) / (2n)! * pi^(2n). DomainError for n = 0.
PiPower zeta_even_exact(unsigned long n);

/// Integral of t^n ln t over [0, 1] = -1/(n+1)^2.
Rational term_log_integral(unsigned long n);

/// Integral of s^k e^s over (-inf, 0] = (-1)^k k!.
Rational signed_factorial_integral(unsigned long k);

}  // namespace basel
