#include "basel/cli.hpp"

#include "basel/errors.hpp"
#include "basel/identities.hpp"
#include "basel/quadrature.hpp"
#include "basel/report.hpp"
#include "basel/sequences.hpp"
#include "basel/series.hpp"
#include "basel/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace basel {
namespace {

constexpr double kDefaultTolerance = 1e-12;

struct CommonOptions {
    std::string format = "pretty";
    std::optional<double> tol;
    std::string out_path;
};

// What a subcommand produced, in every format; the caller picks one.
struct Emitted {
    std::string json;
    std::string csv;
    std::string pretty;
    int code = kExitOk;
};

std::string json_line(const Json& j) { return j.dump() + "\n"; }

std::string csv_lines(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out += (i ? "," : "") + csv_field(cells[i]);
        }
        out += '\n';
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
    return out;
}

double resolve_tolerance(const CommonOptions& common) {
    if (common.tol) {
        return *common.tol;
    }
    if (const char* env = std::getenv(kToleranceEnvVar)) {
        try {
            std::size_t used = 0;
            const double v = std::stod(env, &used);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw UsageError(fmt::format("{}='{}' is not a number", kToleranceEnvVar, env));
    }
    return kDefaultTolerance;
}

void write_atomically(const std::string& path, const std::string& data) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += fmt::format(".tmp.{}", static_cast<long>(::getpid()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw UsageError("cannot write " + tmp.string());
        }
        f << data;
        f.flush();
        if (!f) {
            throw UsageError("short write to " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

Emitted sequence_value(const char* symbol, unsigned long n, const Rational& value) {
    Emitted e;
    e.json = json_line(Json{{"n", n}, {"value", value.to_string()}});
    e.csv = csv_lines({"n", "value"}, {{std::to_string(n), value.to_string()}});
    e.pretty = fmt::format("{}_{} = {}\n", symbol, n, value.to_string());
    return e;
}

Emitted zeta_output(unsigned long n) {
    const PiPower z = zeta_even_exact(n);
    Json j{{"n", n}};
    j.update(to_json(z));
    j["value"] = z.to_double();
    Emitted e;
    e.json = json_line(j);
    e.csv = csv_lines({"n", "coefficient", "pi_exponent", "value"},
                      {{std::to_string(n), z.coefficient().to_string(), std::to_string(z.exponent()),
                        format_float(z.to_double())}});
    e.pretty = fmt::format("zeta({}) = {} = {}\n", 2 * n, z.to_string(), format_float(z.to_double()));
    return e;
}

Emitted certificate_output(const CertificateBundle& bundle) {
    Emitted e;
    Json arr = Json::array();
    std::vector<std::vector<std::string>> rows;
    bool all = true;
    for (const auto& c : bundle) {
        arr.push_back(to_json(c));
        rows.push_back({c.identity, c.pass ? "pass" : "fail", c.max_abs_deviation.to_string(),
                        c.first_difference ? std::to_string(*c.first_difference) : ""});
        e.pretty += fmt::format("{}: {}\n  lhs = {}\n  rhs = {}\n", c.identity, c.pass ? "pass" : "FAIL", c.lhs, c.rhs);
        all = all && c.pass;
    }
    e.json = json_line(bundle.size() == 1 ? arr.front() : arr);
    e.csv = csv_lines({"identity", "status", "max_abs_deviation", "first_difference"}, rows);
    e.code = all ? kExitOk : kExitCheckFailure;
    return e;
}

struct PolyOptions {
    std::string family = "bernoulli";
    unsigned long n = 0;
    std::string check;
    std::string variant = "ii";
    unsigned long k = 2;
};

Emitted poly_output(const PolyOptions& o) {
    if (!o.check.empty()) {
        CertificateBundle bundle;
        if (o.check == "reflection") {
            bundle.push_back(check_reflection(o.n));
        } else if (o.check == "halving") {
            bundle.push_back(check_halving(o.n, parse_halving_variant(o.variant)));
        } else if (o.check == "addition") {
            bundle.push_back(check_addition_recurrence(o.k));
        } else if (o.check == "power-sum") {
            bundle.push_back(power_sum_check(o.k, o.n));
        } else if (o.check == "special") {
            bundle = check_special_values(o.n);
        } else if (o.check == "calculus") {
            bundle = check_calculus(o.n);
        } else if (o.check == "g-at-one") {
            bundle.push_back(check_g_at_one(o.n));
        } else {
            throw UsageError("unknown --check '" + o.check + "'");
        }
        return certificate_output(bundle);
    }
    RationalPolynomial p;
    if (o.family == "bernoulli") {
        p = bernoulli_polynomial(o.n);
    } else if (o.family == "genocchi") {
        p = genocchi_polynomial(o.n);
    } else {
        throw UsageError("--family must be bernoulli or genocchi");
    }
    Emitted e;
    e.json = json_line(Json{{"family", o.family}, {"n", o.n}, {"coefficients", to_json(p)}});
    std::vector<std::vector<std::string>> rows;
    const auto strings = p.to_strings();
    for (std::size_t i = 0; i < strings.size(); ++i) {
        rows.push_back({std::to_string(i), strings[i]});
    }
    e.csv = csv_lines({"degree", "coefficient"}, rows);
    e.pretty = fmt::format("{}_{}(x) = {}\n", o.family == "bernoulli" ? "B" : "G", o.n, p.to_string());
    return e;
}

Emitted integrate_output(const std::string& kind_name, double tol) {
    const IntegralKind kind = parse_integral_kind(kind_name);
    const QuadResult q = integrate(kind, tol);
    Json j{{"kind", kind_name}};
    j.update(to_json(q));
    j["closed_form"] = closed_form(kind);
    Emitted e;
    e.json = json_line(j);
    e.csv = csv_lines({"kind", "value", "err_estimate", "evaluations", "closed_form"},
                      {{kind_name, format_float(q.value), format_float(q.err_estimate), std::to_string(q.evaluations),
                        format_float(closed_form(kind))}});
    e.pretty = fmt::format("{} = {} (err ~ {}, {} evaluations; closed form {})\n", kind_name, format_float(q.value),
                           format_float(q.err_estimate), q.evaluations, format_float(closed_form(kind)));
    return e;
}

Emitted riemann_output(const std::string& kind_name, long n) {
    const IntegralKind kind = parse_integral_kind(kind_name);
    const double v = riemann_sum(kind, n);
    Emitted e;
    e.json = json_line(Json{{"kind", kind_name}, {"n", n}, {"value", v}, {"target", closed_form(kind)}});
    e.csv = csv_lines({"kind", "n", "value", "target"},
                      {{kind_name, std::to_string(n), format_float(v), format_float(closed_form(kind))}});
    e.pretty = fmt::format("riemann_sum({}, n={}) = {} (integral {})\n", kind_name, n, format_float(v),
                           format_float(closed_form(kind)));
    return e;
}

Emitted product_output(const std::string& kind_name, long n) {
    const ProductKind kind = parse_product_kind(kind_name);
    const double v = product_form(kind, n);
    Emitted e;
    e.json = json_line(Json{{"kind", kind_name}, {"n", n}, {"value", v}, {"limit", product_limit(kind)}});
    e.csv = csv_lines({"kind", "n", "value", "limit"},
                      {{kind_name, std::to_string(n), format_float(v), format_float(product_limit(kind))}});
    e.pretty = fmt::format("log product({}, n={}) = {} (limit {})\n", kind_name, n, format_float(v),
                           format_float(product_limit(kind)));
    return e;
}

Emitted dilog_output(double x, const std::string& mode_name, double tol) {
    const DilogMode mode = parse_dilog_mode(mode_name);
    const double v = dilog_S(x, mode, tol);
    Emitted e;
    e.json = json_line(Json{{"x", x}, {"mode", mode_name}, {"value", v}});
    e.csv = csv_lines({"x", "mode", "value"}, {{format_float(x), mode_name, format_float(v)}});
    e.pretty = fmt::format("S({}) [{}] = {}\n", format_float(x), mode_name, format_float(v));
    return e;
}

struct SeriesOptions {
    std::string which = "zeta2";
    unsigned long n = 10;
    bool exact = false;
};

Emitted series_output(const SeriesOptions& o, double tol) {
    Emitted e;
    if (o.which == "zeta2" || o.which == "eta2") {
        const bool zeta = o.which == "zeta2";
        const double v = zeta ? zeta2_partial_float(o.n) : eta2_partial_float(o.n);
        Json j{{"series", o.which}, {"n", o.n}, {"value", v}};
        std::string exact;
        if (o.exact) {
            exact = (zeta ? zeta2_partial(o.n) : eta2_partial(o.n)).to_string();
            j["exact"] = exact;
        }
        e.json = json_line(j);
        e.csv = csv_lines({"series", "n", "value", "exact"}, {{o.which, std::to_string(o.n), format_float(v), exact}});
        e.pretty = fmt::format("{} partial sum, N = {}: {}{}\n", o.which, o.n, format_float(v),
                               o.exact ? " = " + exact : "");
        return e;
    }
    const SeriesReport r = asymptotic_report(parse_proposition(o.which), o.n, tol);
    e.json = json_line(to_json(r));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        rows.push_back({std::to_string(i + 1), r.terms[i].to_string(), format_float(r.term_values[i]),
                        format_float(r.partial_sum_values[i])});
    }
    e.csv = csv_lines({"n", "term_exact", "term", "partial_sum"}, rows);
    e.pretty = fmt::format(
        "{} ({} terms, classically convergent: {})\n  smallest |term| at n = {}: {}\n  optimal truncation: {}\n"
        "  bracket average: {}\n  regularized target: {}\n",
        to_string(r.which), r.terms.size(), r.classically_convergent ? "yes" : "no", r.smallest_term_index,
        format_float(r.smallest_term), format_float(r.optimal_estimate), format_float(r.bracket_average),
        format_float(r.regularized_target));
    return e;
}

Emitted mei_output(double x, unsigned level, unsigned long truncation) {
    const MeiReport m = mei_bisection(x, level, truncation);
    Emitted e;
    e.json = json_line(to_json(m));
    e.csv = csv_lines({"x", "level", "bisection_value", "exact_value", "e_n", "e_n_bound", "partial_fraction_value",
                       "truncation"},
                      {{format_float(m.x), std::to_string(m.level), format_float(m.bisection_value),
                        format_float(m.exact_value), format_float(m.e_n), format_float(m.e_n_bound),
                        format_float(m.partial_fraction_value), std::to_string(m.truncation)}});
    e.pretty = fmt::format(
        "x = {}, level {}\n  bisection sum     {}\n  1/sin^2 x         {}\n  E_n               {} (< {})\n"
        "  partial fractions {} (K = {})\n",
        format_float(m.x), m.level, format_float(m.bisection_value), format_float(m.exact_value), format_float(m.e_n),
        format_float(m.e_n_bound), format_float(m.partial_fraction_value), m.truncation);
    return e;
}

struct VerifyOptions {
    std::string suite = "all";
    std::vector<std::string> checks;
    unsigned threads = 0;
    bool timings = false;
    bool list = false;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

Emitted verify_output(const VerifyOptions& o, double tol) {
    Emitted e;
    if (o.list) {
        for (const auto& id : check_ids()) {
            e.pretty += id + "\n";
        }
        e.json = e.csv = e.pretty;
        return e;
    }
    std::vector<std::string> selection = o.checks;
    if (o.suite != "all") {
        for (auto& id : split_commas(o.suite)) {
            selection.push_back(std::move(id));
        }
    }
    VerifyConfig config;
    config.quad_tol = tol;
    config.threads = o.threads;
    const auto results = run_suite(selection, config);
    e.json = to_jsonl(results, o.timings);
    e.csv = to_csv(results);
    e.pretty = to_table(results, o.timings);
    e.code = summarize(results).failed == 0 ? kExitOk : kExitCheckFailure;
    return e;
}

void add_common(CLI::App* sub, CommonOptions& common) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    sub->add_option("--tol", common.tol,
                    fmt::format("Tolerance (default 1e-12, or ${} when set)", kToleranceEnvVar));
    sub->add_option("--out", common.out_path, "Write output to this file instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numerical tools for Bernoulli/Genocchi numbers, zeta(2) and log integrals", "basel"};
    app.require_subcommand(1);

    CommonOptions common;
    std::function<Emitted()> action;

    unsigned long seq_n = 0;
    auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n");
    bern->add_option("--n", seq_n, "Index")->required();
    add_common(bern, common);
    bern->callback([&] { action = [&] { return sequence_value("B", seq_n, bernoulli(seq_n)); }; });

    auto* geno = app.add_subcommand("genocchi", "Genocchi number G_n");
    geno->add_option("--n", seq_n, "Index")->required();
    add_common(geno, common);
    geno->callback([&] { action = [&] { return sequence_value("G", seq_n, genocchi(seq_n)); }; });

    unsigned long zeta_n = 1;
    auto* zeta = app.add_subcommand("zeta", "Exact zeta(2n) as a rational multiple of pi^(2n)");
    zeta->add_option("--even", zeta_n, "n, giving zeta(2n)")->required()->check(CLI::PositiveNumber);
    add_common(zeta, common);
    zeta->callback([&] { action = [&] { return zeta_output(zeta_n); }; });

    PolyOptions poly_opts;
    auto* poly = app.add_subcommand("poly", "Bernoulli/Genocchi polynomials and identity certificates");
    poly->add_option("--family", poly_opts.family, "bernoulli | genocchi")->capture_default_str();
    poly->add_option("--n", poly_opts.n, "Degree index");
    poly->add_option("--check", poly_opts.check,
                     "reflection | halving | addition | power-sum | special | calculus | g-at-one");
    poly->add_option("--variant", poly_opts.variant, "Halving variant: ii | iii | iv")->capture_default_str();
    poly->add_option("--k", poly_opts.k, "k for addition / power-sum")->capture_default_str();
    add_common(poly, common);
    poly->callback([&] { action = [&] { return poly_output(poly_opts); }; });

    std::string kind_name;
    auto* integ = app.add_subcommand("integrate", "Log-singular integral over [0, 1]");
    integ->add_option("--kind", kind_name, "LOG_OVER_1MT | LOG_OVER_1PT | LOG1P_OVER_T | LOG1M_OVER_T")->required();
    add_common(integ, common);
    integ->callback([&] { action = [&] { return integrate_output(kind_name, resolve_tolerance(common)); }; });

    long sum_n = 2;
    auto* riem = app.add_subcommand("riemann", "Riemann sum (1/n) sum_{k=1}^{n-1} f(k/n)");
    riem->add_option("--kind", kind_name, "LOG_OVER_1MT | LOG1M_OVER_T | LOG_OVER_1PT")->required();
    riem->add_option("--n", sum_n, "Number of subintervals")->required();
    add_common(riem, common);
    riem->callback([&] { action = [&] { return riemann_output(kind_name, sum_n); }; });

    auto* prod = app.add_subcommand("product", "Log of prod_{k=1}^{n-1} (1 +- k/n)^(1/k)");
    prod->add_option("--kind", kind_name, "MINUS | PLUS")->required();
    prod->add_option("--n", sum_n, "n")->required();
    add_common(prod, common);
    prod->callback([&] { action = [&] { return product_output(kind_name, sum_n); }; });

    double dilog_x = 0.0;
    std::string dilog_mode = "series";
    auto* dilog = app.add_subcommand("dilog", "S(x) = sum (2x)^n / n^2 on [-1/2, 1/2]");
    dilog->add_option("--x", dilog_x, "Argument")->required();
    dilog->add_option("--mode", dilog_mode, "series | integral")->capture_default_str();
    add_common(dilog, common);
    dilog->callback([&] { action = [&] { return dilog_output(dilog_x, dilog_mode, resolve_tolerance(common)); }; });

    SeriesOptions series_opts;
    auto* series = app.add_subcommand("series", "Partial sums (zeta2, eta2) or asymptotic reports (PROP_B, PROP_G)");
    series->add_option("--which", series_opts.which, "zeta2 | eta2 | PROP_B | PROP_G")->capture_default_str();
    series->add_option("--n", series_opts.n, "N for partial sums, m_max for PROP_*")->capture_default_str();
    series->add_flag("--exact", series_opts.exact, "Also print the exact partial sum (N <= 10000)");
    add_common(series, common);
    series->callback([&] { action = [&] { return series_output(series_opts, resolve_tolerance(common)); }; });

    double mei_x = 1.0;
    unsigned mei_level = 0;
    unsigned long mei_k = kDefaultPartialFractionTerms;
    auto* mei = app.add_subcommand("mei", "Bisection identity for 1/sin^2 x");
    mei->add_option("--x", mei_x, "x in (0, pi)")->required();
    mei->add_option("--level", mei_level, "Bisection level n (<= 20)")->capture_default_str();
    mei->add_option("--K", mei_k, "Partial-fraction truncation")->capture_default_str();
    add_common(mei, common);
    mei->callback([&] { action = [&] { return mei_output(mei_x, mei_level, mei_k); }; });

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run the identity and bound checks");
    verify->add_option("--suite", verify_opts.suite, "all, or comma-separated check ids")->capture_default_str();
    verify->add_option("--check", verify_opts.checks, "Check id (repeatable)");
    verify->add_option("--threads", verify_opts.threads, "Worker threads (0 = hardware)");
    verify->add_flag("--timings", verify_opts.timings, "Include runtime_ms (makes output run-dependent)");
    verify->add_flag("--list", verify_opts.list, "List check ids and exit");
    add_common(verify, common);
    verify->callback([&] { action = [&] { return verify_output(verify_opts, resolve_tolerance(common)); }; });

    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return kExitUsage;
    }

    try {
        const Emitted e = action();
        const std::string& text = common.format == "json" ? e.json : (common.format == "csv" ? e.csv : e.pretty);
        if (common.out_path.empty()) {
            out << text;
        } else {
            write_atomically(common.out_path, text);
        }
        return e.code;
    } catch (const AccuracyError& ex) {
        err << "error: " << ex.what() << " (best value " << format_float(ex.best_value()) << ")\n";
        return kExitCheckFailure;
    } catch (const std::filesystem::filesystem_error& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        // DomainError, CapacityError, UsageError: bad input
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace basel
