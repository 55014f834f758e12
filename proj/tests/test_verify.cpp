#include "basel/errors.hpp"
#include "basel/report.hpp"
#include "basel/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace basel;

namespace {

const std::vector<CheckResult>& full_run() {
    static const std::vector<CheckResult> results = run_suite({}, VerifyConfig{});
    return results;
}

}  // namespace

TEST_CASE("check ids are unique and sorted") {
    const auto ids = check_ids();
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
}

TEST_CASE("full suite passes") {
    const auto& results = full_run();
    CHECK(results.size() == check_ids().size());
    for (const auto& r : results) {
        CHECK_MESSAGE(r.status != CheckStatus::Fail, r.check_id, ": ", r.lhs, " vs ", r.rhs);
        if (r.status == CheckStatus::Pass && r.abs_err && r.tol) {
            CHECK(*r.abs_err <= *r.tol);
        }
    }
    const SuiteSummary s = summarize(results);
    CHECK(s.failed == 0);
    CHECK(s.errata == 3);
}

TEST_CASE("required coverage is present") {
    const auto ids = check_ids();
    auto count_prefix = [&](const std::string& p) {
        return std::count_if(ids.begin(), ids.end(), [&](const std::string& id) { return id.rfind(p, 0) == 0; });
    };
    CHECK(count_prefix("integral_LOG") == 4);
    CHECK(count_prefix("integral_two_integral_relation") == 1);
    CHECK(count_prefix("functional_dilog_") >= 9);
    CHECK(count_prefix("functional_inverse_") == 4);
    CHECK(count_prefix("lesko_") >= 3);
    CHECK(count_prefix("riemann_") >= 1);
    CHECK(count_prefix("mei_") >= 4);
    CHECK(count_prefix("zeta_even_exact_") == 10);
    CHECK(count_prefix("poly_") >= 9);
    CHECK(count_prefix("power_sum_k") == 7);
    CHECK(count_prefix("prop_b_") >= 1);
    CHECK(count_prefix("prop_g_") >= 1);
    for (const char* e : {"E1_genocchi_g1_sign", "E2_remark_constants", "E3_divergent_propositions"}) {
        CHECK(std::find(ids.begin(), ids.end(), e) != ids.end());
    }
}

TEST_CASE("errata rows only") {
    for (const auto& r : full_run()) {
        const bool erratum = r.check_id.size() > 2 && r.check_id[0] == 'E' && r.check_id[2] == '_';
        CHECK((r.status == CheckStatus::ErratumDocumented) == erratum);
    }
}

TEST_CASE("single selection") {
    const auto r = run_suite({"zeta_even_exact_1"}, VerifyConfig{});
    REQUIRE(r.size() == 1);
    CHECK(r[0].status == CheckStatus::Pass);
    CHECK(r[0].lhs == "1/6·π²");
    CHECK(!r[0].abs_err);
}

TEST_CASE("unknown id is a usage error listing valid ids") {
    try {
        run_suite({"nonexistent"}, VerifyConfig{});
        FAIL("expected UsageError");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("zeta_even_exact_1") != std::string::npos);
    }
}

TEST_CASE("report is independent of thread count") {
    VerifyConfig one;
    one.threads = 1;
    VerifyConfig many;
    many.threads = 8;
    CHECK(to_jsonl(run_suite({}, one)) == to_jsonl(run_suite({}, many)));
}

TEST_CASE("json rows") {
    const auto r = run_suite({"zeta_even_exact_2", "integral_LOG_OVER_1MT"}, VerifyConfig{});
    REQUIRE(r.size() == 2);
    const Json a = to_json(r[0]);
    CHECK(a["check_id"] == "integral_LOG_OVER_1MT");
    CHECK(a["abs_err"].is_number());
    CHECK(!a.contains("runtime_ms"));
    const Json b = to_json(r[1]);
    CHECK(b["abs_err"] == "exact");
    CHECK(b["tol"] == "exact");
    CHECK(to_json(r[1], true).contains("runtime_ms"));
}
