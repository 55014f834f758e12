#pragma once

/**
 * @file series.hpp
 * @brief Partial sums of zeta(2) and eta(2), the sin^-2 bisection identity,
 * and asymptotic readings of the two divergent Bernoulli/Genocchi sums.
 *
 * The Bernoulli and Genocchi sums
 *     sum_{n>=1} (-1)^(n-1) script_b(n)    and    sum_{n>=1} (-1)^(n-1) G_n
 * diverge (|B_2n| grows like (2n)!/(2 pi)^(2n)). They are reported as
 * asymptotic series: exact terms, exact partial sums, the smallest term,
 * and the value of the integral that generates them (the regularized target).
 */

#include "basel/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace basel {

/// Largest N for which partial sums are formed exactly.
inline constexpr unsigned long kExactPartialSumCap = 10'000;

/// sum_{n<=N} 1/n^2 exactly. DomainError for N = 0, CapacityError above the cap.
Rational zeta2_partial(unsigned long N);
/// Same sum in binary64 (no cap).
double zeta2_partial_float(unsigned long N);

/// sum_{n<=N} (-1)^(n-1)/n^2 exactly.
Rational eta2_partial(unsigned long N);
double eta2_partial_float(unsigned long N);

/// target - partial, evaluated at 256 bits with the exact partial sum.
struct TailGap {
    double gap = 0.0;    // target - S_N
    double bound = 0.0;  // the bound the gap is compared against
    bool within = false;
};

/// zeta(2) - S_N, checked against 0 < gap < 1/N.
TailGap zeta2_tail_gap(unsigned long N);
/// pi^2/12 - S_N, checked against |gap| < 1/(N+1)^2.
TailGap eta2_tail_gap(unsigned long N);

inline constexpr unsigned long kDefaultPartialFractionTerms = 10'000;

struct MeiReport {
    double x = 0.0;
    unsigned level = 0;
    double bisection_value = 0.0;  // 2^-2n sum_{k<2^n} 1/sin^2((k pi + x)/2^n)
    double exact_value = 0.0;      // 1/sin^2 x
    double e_n = 0.0;              // remainder after removing the centred 1/(x + k pi)^2 terms
    double centered_sum = 0.0;     // sum_{k=-2^(n-1)}^{2^(n-1)-1} 1/(x + k pi)^2
    double e_n_bound = 0.0;        // 2^-n
    double partial_fraction_value = 0.0;
    double partial_fraction_tail = 0.0;  // 2/(pi^2 K), already included above
    unsigned long truncation = 0;        // K
};

/// x in (0, pi) at least 1e-9 from either end, level <= 20.
MeiReport mei_bisection(double x, unsigned level,
                        unsigned long truncation = kDefaultPartialFractionTerms);

enum class Proposition {
    PropB,  // sum (-1)^(n-1) script_b(n) = sum B_2n   ~ pi^2/6 - 3/2
    PropG,  // sum (-1)^(n-1) G_n                      ~ pi^2/12
};
std::string to_string(Proposition which);
Proposition parse_proposition(const std::string& text);

inline constexpr unsigned long kMaxAsymptoticTerms = 40;

struct SeriesReport {
    Proposition which = Proposition::PropB;
    std::vector<Rational> terms;         // terms[i] is the (i+1)-th term
    std::vector<Rational> partial_sums;  // partial_sums[i] = terms[0] + ... + terms[i]
    std::vector<double> term_values;
    std::vector<double> partial_sum_values;
    /// 1-based index of the smallest nonzero |term|; ties resolve to the later index.
    std::size_t smallest_term_index = 0;
    double smallest_term = 0.0;  // |term| at that index
    /// Partial sum of the terms strictly before the smallest term.
    double optimal_estimate = 0.0;
    /// Mean of the partial sums just before and just after the smallest term.
    double bracket_average = 0.0;
    /// min over truncations k of |S_k - target|.
    double best_truncation_error = 0.0;
    double regularized_target = 0.0;
    bool classically_convergent = false;
};

/// 1 <= m_max <= 40.
SeriesReport asymptotic_report(Proposition which, unsigned long m_max, double tol = 1e-12);

/// PropB: -int_0^1 ln t/(1-t) dt - 3/2;  PropG: -int_0^1 ln t/(1+t) dt.
double regularized_target(Proposition which, double tol = 1e-12);

/// Regularized values of the rearranged sums
///     sum_{n>=1} (2^(2n) - 1) B_2n   and   sum_{n>=1} G_2n
/// for a given choice of B_1 and G_1. They follow from the PropG target by
/// moving the n = 1 term across: target + B_1 and G_1 - target.
struct RemarkConstants {
    double weighted_bernoulli_sum = 0.0;
    double even_genocchi_sum = 0.0;
};
RemarkConstants remark_constants(const Rational& b1, const Rational& g1, double tol = 1e-12);

}  // namespace basel
