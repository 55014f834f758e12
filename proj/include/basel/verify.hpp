#pragma once

/**
 * @file verify.hpp
 * @brief Runs every identity and bound check and collects the outcome.
 *
 * Each check has a stable id and produces one CheckResult. Results are
 * sorted by id before they are returned, so the report does not depend on
 * thread scheduling. All tolerances come from VerifyConfig.
 */

#include <optional>
#include <string>
#include <vector>

namespace basel {

enum class CheckStatus { Pass, Fail, ErratumDocumented };
std::string to_string(CheckStatus status);

struct CheckResult {
    std::string check_id;
    CheckStatus status = CheckStatus::Fail;
    std::string lhs;
    std::string rhs;
    /// nullopt means the comparison was exact.
    std::optional<double> abs_err;
    std::optional<double> tol;
    long runtime_ms = 0;
};

struct VerifyConfig {
    double quad_tol = 1e-12;            // tolerance handed to every quadrature call
    double closed_form_tol = 1e-10;     // integral vs closed form
    double two_integral_tol = 1e-11;
    double term_integral_tol = 1e-12;   // t^n ln t quadrature vs -1/(n+1)^2
    double mei_rel_tol = 1e-9;
    double mei_remainder_slack = 1e-12;
    double partial_fraction_rel_tol = 1e-8;
    double functional_eq_tol = 1e-9;
    double lesko_tol = 1e-8;
    double dilog_agreement_tol = 1e-9;
    double ode_tol = 1e-12;
    double riemann_limit_tol = 1e-2;
    double regularized_tol = 1e-9;
    double bracket_tol = 5e-3;
    double bracket_reference = 0.144934;
    double divergence_threshold = 1e6;

    unsigned long zeta_max_n = 10;
    unsigned long relation_max_n = 200;
    unsigned long poly_max_n = 40;
    unsigned long power_sum_max_k = 8;
    unsigned long power_sum_max_n = 100;
    unsigned long asymptotic_terms = 40;
    long riemann_small_n = 1'000;
    long riemann_large_n = 100'000;
    long monotonicity_n = 10'000;
    unsigned mei_max_level = 12;

    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Every registered check id, sorted.
std::vector<std::string> check_ids();

/// Runs the selected checks (all when empty). UsageError on unknown ids.
std::vector<CheckResult> run_suite(const std::vector<std::string>& selection,
                                   const VerifyConfig& config = {});

struct SuiteSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errata = 0;
};
SuiteSummary summarize(const std::vector<CheckResult>& results);

}  // namespace basel
