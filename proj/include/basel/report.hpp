#pragma once

/**
 * @file report.hpp
 * @brief JSON / CSV / text renderings of library results.
 *
 * Exact values are strings ("p/q", or "p" when q = 1). Floats in JSON use
 * the shortest representation that round-trips; text and CSV use 15
 * significant digits.
 */

#include "basel/identities.hpp"
#include "basel/polynomial.hpp"
#include "basel/quadrature.hpp"
#include "basel/rational.hpp"
#include "basel/series.hpp"
#include "basel/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace basel {

using Json = nlohmann::ordered_json;

/// 15 significant digits.
std::string format_float(double v);

Json to_json(const Rational& q);
Json to_json(const PiPower& p);
Json to_json(const RationalPolynomial& p);
Json to_json(const QuadResult& q);
Json to_json(const Certificate& c);
Json to_json(const MeiReport& m);
Json to_json(const SeriesReport& s);
Json to_json(const CheckResult& r, bool include_timing = false);

/// One CheckResult per line.
std::string to_jsonl(const std::vector<CheckResult>& results, bool include_timing = false);

/// check_id,status,abs_err,tol,lhs,rhs
std::string to_csv(const std::vector<CheckResult>& results);

/// Fixed-width table plus a one-line summary.
std::string to_table(const std::vector<CheckResult>& results, bool include_timing = false);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace basel
