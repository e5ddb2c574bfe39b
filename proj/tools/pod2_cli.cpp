#include "pod2/checks.hpp"
#include "pod2/kloosterman.hpp"
#include "pod2/numeric.hpp"
#include "pod2/qseries.hpp"
#include "pod2/rademacher.hpp"
#include "pod2/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace pod2;
using qseries::BigInt;

// Exit codes.
constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_not_converged = 2;
constexpr int exit_mismatch = 3;

enum class Format { human, json, csv };

struct RunConfig {
    std::int64_t k_max = 100;
    double quad_tol = 1e-10;
    int tail_window = 5;
    double tail_threshold = 1e-2;
    std::string precision = "double";
    bool json = false;
    bool csv = false;
    bool check = false;
    bool no_timing = false;

    Format format() const { return json ? Format::json : csv ? Format::csv : Format::human; }
    rademacher::TruncationPolicy policy() const { return {k_max, tail_window, tail_threshold}; }
    analytic::QuadratureConfig quadrature() const {
        analytic::QuadratureConfig cfg;
        cfg.abs_tol = quad_tol;
        return cfg;
    }
};

struct Evaluated {
    report::ReportRecord record;
    std::string table;  // contribution table, filled on mismatch
};

template <class Real>
Evaluated evaluate(std::int64_t n, const BigInt& oracle, const RunConfig& rc) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = rademacher::pod2_exact<Real>(n, rc.policy(), rc.quadrature());
    const double ms =
        rc.no_timing ? 0.0 : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    Evaluated out{report::make_record(result, oracle, ms), {}};
    if (result.rounded != oracle || !result.converged) {
        std::ostringstream os;
        report::write_contribution_table(os, result);
        out.table = os.str();
    }
    return out;
}

Evaluated evaluate_any(std::int64_t n, const BigInt& oracle, const RunConfig& rc) {
    const PrecisionMode mode = PrecisionMode::parse(rc.precision);
    if (!mode.extended) return evaluate<double>(n, oracle, rc);
    ScopedPrecision scope(mode.digits);
    return evaluate<Extended>(n, oracle, rc);
}

void emit(std::ostream& os, const report::ReportRecord& r, Format f) {
    switch (f) {
        case Format::human: report::write_human(os, r); break;
        case Format::json: os << report::to_json(r) << '\n'; break;
        case Format::csv: os << report::to_csv(r) << '\n'; break;
    }
}

// Non-convergence takes precedence: a mismatch from an unconverged run says
// nothing about the formula.
int status_of(const report::ReportRecord& r) {
    if (!r.converged) return exit_not_converged;
    if (r.rounded != r.oracle) return exit_mismatch;
    return exit_ok;
}

int cmd_count(std::int64_t a, std::int64_t b, const RunConfig& rc) {
    const auto table = qseries::pod2_count_table(static_cast<std::size_t>(b));
    if (rc.format() == Format::csv) std::cout << "n,pod2\n";
    for (std::int64_t n = a; n <= b; ++n) {
        const BigInt& v = table[static_cast<std::size_t>(n)];
        switch (rc.format()) {
            case Format::human: std::cout << n << ' ' << v << '\n'; break;
            case Format::json:
                std::cout << nlohmann::json{{"n", n}, {"pod2", v.str()}}.dump() << '\n';
                break;
            case Format::csv: std::cout << n << ',' << v << '\n'; break;
        }
    }
    return exit_ok;
}

int cmd_exact(std::int64_t n, const RunConfig& rc) {
    const BigInt oracle = qseries::pod2_count_oracle(static_cast<std::size_t>(n));
    const Evaluated ev = evaluate_any(n, oracle, rc);
    if (rc.format() == Format::csv) std::cout << report::csv_header() << '\n';
    emit(std::cout, ev.record, rc.format());
    if (!ev.record.converged) {
        std::cerr << "not converged\n" << ev.table;
        return exit_not_converged;
    }
    if (rc.check && ev.record.rounded != oracle) {
        std::cerr << "mismatch: rounded " << ev.record.rounded << ", oracle " << oracle << '\n' << ev.table;
        return exit_mismatch;
    }
    return exit_ok;
}

int cmd_verify(std::int64_t a, std::int64_t b, const RunConfig& rc) {
    const auto oracle = qseries::pod2_count_table(static_cast<std::size_t>(b));
    if (rc.format() == Format::csv) std::cout << report::csv_header() << '\n';
    double max_diff = 0;
    double max_imag = 0;
    std::int64_t mismatches = 0;
    std::int64_t unconverged = 0;
    int status = exit_ok;
    for (std::int64_t n = a; n <= b; ++n) {
        const Evaluated ev = evaluate_any(n, oracle[static_cast<std::size_t>(n)], rc);
        const auto& r = ev.record;
        emit(std::cout, r, rc.format());
        std::cout.flush();
        max_diff = std::max(max_diff, r.diff);
        max_imag = std::max(max_imag, r.imag_residual);
        if (!r.converged) ++unconverged;
        if (r.rounded != r.oracle) {
            ++mismatches;
            std::cerr << ev.table;
        }
        const int s = status_of(r);
        if (s == exit_not_converged || (s == exit_mismatch && status == exit_ok)) status = s;
    }
    std::ostream& summary = rc.format() == Format::human ? std::cout : std::cerr;
    summary << "summary: n=" << a << ".." << b << "  mismatches=" << mismatches << "  unconverged=" << unconverged
            << std::scientific << std::setprecision(3) << "  max|diff|=" << max_diff << "  max imag=" << max_imag
            << '\n';
    return status;
}

int cmd_kloosterman(const std::string& family, std::int64_t k, std::int64_t n, std::optional<std::int64_t> m,
                    std::optional<std::int64_t> v, bool closed, bool definition, const RunConfig& rc) {
    using namespace kloosterman;
    KloostermanSpec spec;
    spec.family = parse_family(family);
    spec.k = k;
    spec.n = n;
    spec.m = m.value_or(0);
    if (family_has_v(spec.family)) spec.v = v.value_or(0);
    else if (v) throw CLI::ValidationError("v", "family " + family + " takes no v");
    validate(spec);
    const bool both = closed == definition;  // neither flag, or both
    const auto def = kloosterman_definition<double>(spec);
    const auto clo = kloosterman_closed<double>(spec);
    const double diff = abs(def.value - clo.value);
    std::optional<double> ratio;
    if (n >= 1) ratio = bound_ratio(spec);
    if (rc.format() == Format::json) {
        nlohmann::json j{{"family", family}, {"k", k}, {"n", n}, {"m", spec.m}, {"terms", clo.term_count}};
        if (spec.v) j["v"] = *spec.v;
        if (both || definition) j["definition"] = {def.value.re, def.value.im};
        if (both || closed) j["closed"] = {clo.value.re, clo.value.im};
        if (both) j["diff"] = diff;
        if (ratio) j["bound_ratio"] = *ratio;
        std::cout << j.dump() << '\n';
        return exit_ok;
    }
    auto show = [](const Complex<double>& z) {
        std::ostringstream os;
        os << std::setprecision(15) << z.re << (z.im < 0 ? " - " : " + ") << std::abs(z.im) << "i";
        return os.str();
    };
    if (both || definition) std::cout << "definition: " << show(def.value) << '\n';
    if (both || closed) std::cout << "closed:     " << show(clo.value) << '\n';
    if (both) std::cout << "diff:       " << std::scientific << std::setprecision(3) << diff << '\n';
    if (ratio) std::cout << "bound ratio |K|/(n^(1/3) k^(2/3)): " << std::defaultfloat << *ratio << '\n';
    return exit_ok;
}

int cmd_checks(const std::string& suite, const RunConfig& rc) {
    const auto results = checks::run_suite(checks::parse_suite(suite));
    bool all_passed = true;
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        if (rc.format() == Format::json) {
            nlohmann::json j{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
            j["ms"] = rc.no_timing ? 0.0 : r.ms;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << "  (" << r.detail << ")\n";
        }
    }
    if (rc.format() != Format::json) std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << '\n';
    return all_passed ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pod2: partitions with even largest part and odd parts at most twice"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig rc;
    app.add_option("--kmax", rc.k_max, "Truncation point of the k-series")->check(CLI::PositiveNumber);
    app.add_option("--quad-tol", rc.quad_tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tail-window", rc.tail_window, "Number of trailing k-blocks checked for convergence")
        ->check(CLI::PositiveNumber);
    app.add_option("--tail-threshold", rc.tail_threshold, "Largest admissible trailing block modulus")
        ->check(CLI::PositiveNumber);
    app.add_option("--precision", rc.precision, "double | extended:<digits>")
        ->check([](const std::string& s) -> std::string {
            try {
                PrecisionMode::parse(s);
            } catch (const std::exception& e) {
                return e.what();
            }
            return {};
        });
    auto* json_flag = app.add_flag("--json", rc.json, "One JSON object per line");
    auto* csv_flag = app.add_flag("--csv", rc.csv, "CSV with header");
    json_flag->excludes(csv_flag);
    app.add_flag("--check", rc.check, "Compare with the combinatorial count");
    app.add_flag("--no-timing", rc.no_timing, "Write ms = 0 for reproducible output");

    std::int64_t a = 0, b = 0, n = 0;
    auto* count = app.add_subcommand("count", "pod2(n) from the combinatorial count for a <= n <= b");
    count->add_option("a", a)->required()->check(CLI::NonNegativeNumber);
    count->add_option("b", b)->required()->check(CLI::NonNegativeNumber);

    auto* exact = app.add_subcommand("exact", "Evaluate the exact formula at n");
    exact->add_option("n", n)->required()->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Exact formula against the count for a <= n <= b");
    verify->add_option("a", a)->required()->check(CLI::NonNegativeNumber);
    verify->add_option("b", b)->required()->check(CLI::NonNegativeNumber);

    std::string family;
    std::int64_t kk = 1, kn = 0;
    std::optional<std::int64_t> km, kv;
    bool closed = false, definition = false, both = false;
    auto* kloo = app.add_subcommand("kloosterman", "Evaluate one Kloosterman sum");
    kloo->add_option("family", family, "611 ... 131")->required();
    kloo->add_option("k", kk)->required()->check(CLI::PositiveNumber);
    kloo->add_option("n", kn)->required();
    kloo->add_option("m", km);
    kloo->add_option("v", kv);
    kloo->add_flag("--closed", closed, "Closed form only");
    kloo->add_flag("--definition", definition, "Definition form only");
    kloo->add_flag("--both", both, "Both forms and their difference (default)");

    std::string suite = "all";
    auto* chk = app.add_subcommand("checks", "Run invariant suites");
    chk->add_option("--suite", suite, "identities | multipliers | kloosterman | transforms | all")
        ->check(CLI::IsMember({"identities", "multipliers", "kloosterman", "transforms", "all"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if ((count->parsed() || verify->parsed()) && a > b) {
            throw CLI::ValidationError("range", "a must not exceed b");
        }
        if (count->parsed()) return cmd_count(a, b, rc);
        if (exact->parsed()) return cmd_exact(n, rc);
        if (verify->parsed()) return cmd_verify(a, b, rc);
        if (kloo->parsed()) {
            if (both) closed = definition = false;
            return cmd_kloosterman(family, kk, kn, km, kv, closed, definition, rc);
        }
        if (chk->parsed()) return cmd_checks(suite, rc);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return static_cast<int>(CLI::ExitCodes::ValidationError);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_failure;
}
