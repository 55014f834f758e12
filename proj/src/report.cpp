#include "basel/report.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace basel {

std::string format_float(double v) { return fmt::format("{:.15g}", v); }

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const PiPower& p) {
    return Json{{"coefficient", p.coefficient().to_string()}, {"pi_exponent", p.exponent()}};
}

Json to_json(const RationalPolynomial& p) { return Json(p.to_strings()); }

Json to_json(const QuadResult& q) {
    return Json{{"value", q.value}, {"err_estimate", q.err_estimate}, {"evaluations", q.evaluations}};
}

Json to_json(const Certificate& c) {
    Json j{{"identity", c.identity},
           {"pass", c.pass},
           {"lhs", c.lhs},
           {"rhs", c.rhs},
           {"max_abs_deviation", c.max_abs_deviation.to_string()}};
    j["first_difference"] = c.first_difference ? Json(*c.first_difference) : Json(nullptr);
    return j;
}

Json to_json(const MeiReport& m) {
    return Json{{"x", m.x},
                {"level", m.level},
                {"bisection_value", m.bisection_value},
                {"exact_value", m.exact_value},
                {"e_n", m.e_n},
                {"e_n_bound", m.e_n_bound},
                {"centered_sum", m.centered_sum},
                {"partial_fraction_value", m.partial_fraction_value},
                {"partial_fraction_tail", m.partial_fraction_tail},
                {"truncation", m.truncation}};
}

Json to_json(const SeriesReport& s) {
    Json terms = Json::array();
    Json sums = Json::array();
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        terms.push_back(Json{{"exact", s.terms[i].to_string()}, {"value", s.term_values[i]}});
        sums.push_back(Json{{"exact", s.partial_sums[i].to_string()}, {"value", s.partial_sum_values[i]}});
    }
    return Json{{"which", to_string(s.which)},
                {"terms", std::move(terms)},
                {"partial_sums", std::move(sums)},
                {"smallest_term_index", s.smallest_term_index},
                {"smallest_term", s.smallest_term},
                {"optimal_estimate", s.optimal_estimate},
                {"bracket_average", s.bracket_average},
                {"best_truncation_error", s.best_truncation_error},
                {"regularized_target", s.regularized_target},
                {"classically_convergent", s.classically_convergent}};
}

Json to_json(const CheckResult& r, bool include_timing) {
    Json j{{"check_id", r.check_id}, {"status", to_string(r.status)}, {"lhs", r.lhs}, {"rhs", r.rhs}};
    j["abs_err"] = r.abs_err ? Json(*r.abs_err) : Json("exact");
    j["tol"] = r.tol ? Json(*r.tol) : Json("exact");
    if (include_timing) {
        j["runtime_ms"] = r.runtime_ms;
    }
    return j;
}

std::string to_jsonl(const std::vector<CheckResult>& results, bool include_timing) {
    std::string out;
    for (const auto& r : results) {
        out += to_json(r, include_timing).dump();
        out += '\n';
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

std::string to_csv(const std::vector<CheckResult>& results) {
    std::string out = "check_id,status,abs_err,tol,lhs,rhs\n";
    for (const auto& r : results) {
        out += fmt::format("{},{},{},{},{},{}\n", csv_field(r.check_id), to_string(r.status),
                           r.abs_err ? format_float(*r.abs_err) : "exact", r.tol ? format_float(*r.tol) : "exact",
                           csv_field(r.lhs), csv_field(r.rhs));
    }
    return out;
}

std::string to_table(const std::vector<CheckResult>& results, bool include_timing) {
    std::size_t width = 8;
    for (const auto& r : results) {
        width = std::max(width, r.check_id.size());
    }
    std::string out = fmt::format("{:<{}}  {:<18}  {:>22}  {:>22}{}\n", "check_id", width, "status", "abs_err", "tol",
                                  include_timing ? "  runtime_ms" : "");
    for (const auto& r : results) {
        out += fmt::format("{:<{}}  {:<18}  {:>22}  {:>22}", r.check_id, width, to_string(r.status),
                           r.abs_err ? format_float(*r.abs_err) : "exact", r.tol ? format_float(*r.tol) : "exact");
        if (include_timing) {
            out += fmt::format("  {:>10}", r.runtime_ms);
        }
        out += '\n';
    }
    const SuiteSummary s = summarize(results);
    out += fmt::format("\n{} checks: {} pass, {} fail, {} erratum_documented\n", results.size(), s.passed, s.failed,
                       s.errata);
    return out;
}

}  // namespace basel
