/*
   Copyright 2026 The gapdeg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gapdeg/cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapdeg/asymptotic/buchstab.hpp"
#include "gapdeg/asymptotic/constants.hpp"
#include "gapdeg/asymptotic/dfunc.hpp"
#include "gapdeg/cli/cache.hpp"
#include "gapdeg/cli/config.hpp"
#include "gapdeg/exact/counting.hpp"
#include "gapdeg/exact/estimate.hpp"
#include "gapdeg/exact/numeric.hpp"
#include "gapdeg/oracle/census.hpp"
#include "gapdeg/verify/checks.hpp"

namespace gapdeg::cli {

namespace {

namespace fs = std::filesystem;
using exact::ExactRatio;
using exact::FieldSize;
using exact::TableKind;

// A computation request that cannot be served; reported as a usage error.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::optional<FieldSize> parse_q(const std::string& text, TableKind kind) {
    const bool poly = kind == TableKind::r || kind == TableKind::f;
    if (text.empty() || text == "-") {
        if (poly) throw UsageError("--q is required for polynomial tables");
        return std::nullopt;
    }
    if (!poly) throw UsageError("permutation tables take no field size; pass --q - or omit it");
    std::size_t used = 0;
    unsigned long q = 0;
    try {
        q = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size()) throw UsageError("--q must be a positive integer or '-'");
    return FieldSize(q);
}

std::string q_text(const std::optional<FieldSize>& q) { return q ? std::to_string(q->value()) : "-"; }

fs::path resolve(const Config& cfg, const std::string& path) {
    const fs::path p(path);
    return p.is_absolute() ? p : fs::path(cfg.output_dir) / p;
}

// Writes to the named file (resolved against the output directory) or to out.
template <class Fn>
void emit(const Config& cfg, const std::string& path, std::ostream& out, Fn&& write) {
    if (path.empty()) {
        write(out);
        return;
    }
    const fs::path target = resolve(cfg, path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    std::ofstream file(target);
    if (!file) throw std::runtime_error("cannot write " + target.string());
    write(file);
}

std::vector<ExactRatio> exact_column(TableKind kind, const std::optional<FieldSize>& q, unsigned m,
                                     std::size_t n_max) {
    switch (kind) {
        case TableKind::r: {
            const auto t = exact::rough_table_rec(*q, m, n_max);
            std::vector<ExactRatio> out;
            mpz_class qn = 1;
            for (std::size_t n = 0; n <= n_max; ++n, qn *= static_cast<unsigned long>(q->value()))
                out.emplace_back(t.counts[n], qn);
            return out;
        }
        case TableKind::p: return exact::perm_rough_table(m, n_max);
        case TableKind::f: return exact::f_table(*q, m, n_max);
        case TableKind::g: return exact::g_table(m, n_max);
    }
    throw std::logic_error("unhandled table kind");
}

// One string per n: "num/den" in exact mode, %.17g otherwise. Served from
// the cache when enabled.
std::vector<std::string> column_strings(const Config& cfg, TableKind kind, const std::optional<FieldSize>& q,
                                        unsigned m, std::size_t n_max, bool exact_mode) {
    const CacheKey key{exact::to_string(kind) + (exact_mode ? "-exact" : "-numeric"),
                       q ? q->value() : 0ul, m, n_max};
    const TableCache cache(fs::path(cfg.output_dir) / "cache");
    if (cfg.cache)
        if (auto hit = cache.load(key)) return *hit;
    std::vector<std::string> values;
    if (exact_mode) {
        for (const auto& x : exact_column(kind, q, m, n_max)) values.push_back(x.fraction_str());
    } else {
        for (double x : exact::numeric_table(kind, q, m, n_max).values) values.push_back(verify::format_double(x));
    }
    if (cfg.cache) cache.store(key, values);
    return values;
}

double float_of(const std::string& value, bool exact_mode) {
    if (!exact_mode) return std::stod(value);
    return mpq_class(value).get_d();
}

asymptotic::GridFunction omega_for(const Config& cfg) {
    return asymptotic::solve_buchstab(asymptotic::kBuchstabTailStart, cfg.step);
}

nlohmann::json real_json(const HighPrecisionReal& x, int digits) {
    nlohmann::json j{{"value", x.str(digits)}, {"precision_bits", x.precision_bits}};
    if (x.error_bound) j["error_bound"] = *x.error_bound;
    return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gap statistics of divisor degrees of random polynomials and permutations"};
    app.name("gapdeg");
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, output_dir;
    std::optional<double> step, u_max;
    std::optional<std::uint64_t> budget;
    std::optional<std::size_t> exact_threshold;
    bool no_cache = false;
    app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--output-dir", output_dir, "directory for reports, dumps and the table cache");
    app.add_option("--step", step, "grid step for w and d (1/M, 8 | M)");
    app.add_option("--u-max", u_max, "d is solved on [0, u-max]");
    app.add_option("--budget", budget, "enumeration budget for censuses");
    app.add_option("--exact-threshold", exact_threshold, "largest n computed exactly by default");
    app.add_flag("--no-cache", no_cache, "bypass the on-disk table cache");

    const std::vector<std::string> kinds{"r", "p", "f", "g"};

    // count
    auto* count = app.add_subcommand("count", "one value r(n,m), p(n,m), f(n,m) or g(n,m)");
    std::string count_kind, count_q;
    unsigned long count_n = 0;
    unsigned count_m = 0;
    bool force_exact = false, force_numeric = false;
    count->add_option("kind", count_kind)->required()->check(CLI::IsMember(kinds));
    count->add_option("--q", count_q, "field size, '-' for permutations");
    count->add_option("--n", count_n)->required();
    count->add_option("--m", count_m)->required();
    auto* fe = count->add_flag("--exact", force_exact, "exact rational (default when n <= exact threshold)");
    count->add_flag("--numeric", force_numeric, "double precision recurrence")->excludes(fe);

    // table
    auto* table = app.add_subcommand("table", "a column n = 0..n_max at fixed m");
    std::string table_kind, table_q, table_format = "csv", table_out;
    unsigned table_m = 0;
    std::size_t table_n_max = 0;
    bool table_exact = false, table_numeric = false;
    table->add_option("kind", table_kind)->required()->check(CLI::IsMember(kinds));
    table->add_option("--q", table_q, "field size, '-' for permutations");
    table->add_option("--m", table_m)->required();
    table->add_option("--n-max", table_n_max)->required();
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--output", table_out, "file (relative to the output directory); stdout if omitted");
    auto* te = table->add_flag("--exact", table_exact);
    table->add_flag("--numeric", table_numeric)->excludes(te);

    // buchstab, dfunc
    auto* buchstab = app.add_subcommand("buchstab", "Buchstab's function w(u)");
    auto* dfunc = app.add_subcommand("dfunc", "the density function d(u)");
    double grid_u = 0.0;
    std::string grid_out;
    for (auto* sub : {buchstab, dfunc}) {
        auto* u_opt = sub->add_option("--u", grid_u, "evaluate at u");
        auto* dump = sub->add_flag("--dump", "CSV u,value,error_bound over the grid");
        u_opt->excludes(dump);
        sub->add_option("--output", grid_out, "dump file (relative to the output directory)");
        sub->require_option(1, 2);
    }

    // constants
    auto* consts = app.add_subcommand("constants", "C, kappa and tau");
    std::optional<unsigned> precision;
    std::string const_format = "text";
    consts->add_option("--precision", precision, "working precision in bits");
    consts->add_option("--format", const_format)->check(CLI::IsMember({"text", "json"}));

    // census
    auto* census = app.add_subcommand("census", "brute-force counts by enumeration");
    census->require_subcommand(1);
    auto* census_poly = census->add_subcommand("poly", "all monic polynomials of degree n over F_q");
    auto* census_perm = census->add_subcommand("perm", "all cycle types of S_n");
    unsigned census_q = 0, census_n = 0;
    census_poly->add_option("--q", census_q, "prime power")->required();
    census_poly->add_option("--n", census_n)->required();
    census_perm->add_option("--n", census_n)->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification campaign");
    std::string suite = "all", report_path = "report.json";
    bool list_checks = false;
    verify_cmd->add_option("--suite", suite, "'all' or one check id");
    verify_cmd->add_option("--report", report_path, "JSON report; series CSV goes next to it");
    verify_cmd->add_flag("--list", list_checks, "print the check ids and exit");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "numerical estimates of c_q or eta_q(m)");
    std::string est_kind, est_q = "2";
    unsigned est_m = 1;
    std::optional<unsigned long> est_n;
    estimate->add_option("kind", est_kind)->required()->check(CLI::IsMember({"cq", "eta"}));
    estimate->add_option("--q", est_q, "field size, '-' for the permutation analogue");
    estimate->add_option("--m", est_m)->check(CLI::PositiveNumber);
    estimate->add_option("--n", est_n, "default 1000 m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Config cfg;
        if (!config_path.empty()) cfg = load_config(config_path);
        if (!output_dir.empty()) cfg.output_dir = output_dir;
        apply_environment(cfg);
        if (step) cfg.step = *step;
        if (u_max) cfg.u_max = *u_max;
        if (budget) cfg.enumeration_budget = *budget;
        if (exact_threshold) cfg.exact_threshold = *exact_threshold;
        if (no_cache) cfg.cache = false;
        if (precision) cfg.precision_bits = *precision;
        cfg.validate();

        if (count->parsed()) {
            const TableKind kind = exact::parse_table_kind(count_kind);
            const auto q = parse_q(count_q, kind);
            const bool exact_mode = force_exact || (!force_numeric && count_n <= cfg.exact_threshold);
            if (exact_mode) {
                ExactRatio v;
                switch (kind) {
                    case TableKind::r: v = exact::r_ratio(*q, static_cast<unsigned>(count_n), count_m); break;
                    case TableKind::p: v = exact::perm_rough(static_cast<unsigned>(count_n), count_m); break;
                    case TableKind::f: v = exact::f_table(*q, count_m, count_n)[count_n]; break;
                    case TableKind::g: v = exact::g_table(count_m, count_n)[count_n]; break;
                }
                out << v.str() << '\n';
            } else {
                out << verify::format_double(exact::numeric_table(kind, q, count_m, count_n).values[count_n]) << '\n';
            }
            return kExitOk;
        }

        if (table->parsed()) {
            const TableKind kind = exact::parse_table_kind(table_kind);
            const auto q = parse_q(table_q, kind);
            const bool exact_mode = table_exact || (!table_numeric && table_n_max <= cfg.exact_threshold);
            if (!exact_mode && table_n_max > exact::kExactThreshold) {
                const auto rep = exact::validate_overlap(kind, q, table_m);
                if (!rep.ok) {
                    err << "numeric table disagrees with the exact one by " << verify::format_double(rep.max_rel_deviation)
                        << " at n=" << rep.worst_n << '\n';
                    return kExitFailed;
                }
            }
            const auto values = column_strings(cfg, kind, q, table_m, table_n_max, exact_mode);
            emit(cfg, table_out, out, [&](std::ostream& os) {
                if (table_format == "csv") {
                    os << "kind,q,n,m,value_exact,value_float\n";
                    for (std::size_t n = 0; n < values.size(); ++n)
                        os << table_kind << ',' << q_text(q) << ',' << n << ',' << table_m << ','
                           << (exact_mode ? values[n] : "") << ','
                           << verify::format_double(float_of(values[n], exact_mode)) << '\n';
                } else {
                    nlohmann::json j{{"kind", table_kind}, {"q", q_text(q)}, {"m", table_m},
                                     {"n_max", table_n_max}, {"mode", exact_mode ? "exact" : "numeric"}};
                    j["rows"] = nlohmann::json::array();
                    for (std::size_t n = 0; n < values.size(); ++n) {
                        nlohmann::json row{{"n", n}, {"value_float", float_of(values[n], exact_mode)}};
                        row["value_exact"] = exact_mode ? nlohmann::json(values[n]) : nlohmann::json(nullptr);
                        j["rows"].push_back(row);
                    }
                    os << j.dump(2) << '\n';
                }
            });
            return kExitOk;
        }

        if (buchstab->parsed() || dfunc->parsed()) {
            auto* sub = buchstab->parsed() ? buchstab : dfunc;
            const auto omega = omega_for(cfg);
            const auto grid = buchstab->parsed() ? omega : asymptotic::solve_d(cfg.u_max, cfg.step, omega);
            if (sub->count("--dump") > 0) {
                emit(cfg, grid_out, out, [&](std::ostream& os) { grid.write_csv(os); });
            } else {
                if (grid_u < (buchstab->parsed() ? 1.0 : 0.0))
                    throw UsageError(buchstab->parsed() ? "w(u) is defined for u >= 1" : "d(u) is defined for u >= 0");
                out << verify::format_double(grid(grid_u)) << '\n';
            }
            return kExitOk;
        }

        if (consts->parsed()) {
            const auto c = asymptotic::constants(cfg.precision_bits, omega_for(cfg));
            if (const_format == "text") {
                out << "C = " << c.C.fixed(6) << '\n'
                    << "kappa = " << c.kappa.fixed(6) << '\n'
                    << "tau = " << c.tau.fixed(6) << '\n';
            } else {
                const int digits = static_cast<int>(digits10_for_bits(cfg.precision_bits)) - 2;
                nlohmann::json j{{"euler_gamma", real_json(c.euler_gamma, digits)},
                                 {"exp_neg_gamma", real_json(c.exp_neg_gamma, digits)},
                                 {"C", real_json(c.C, digits)},
                                 {"kappa", real_json(c.kappa, 12)},
                                 {"tau", real_json(c.tau, 12)}};
                out << j.dump(2) << '\n';
            }
            return kExitOk;
        }

        if (census_poly->parsed()) {
            const auto field = oracle::Field::of_order(census_q);
            const auto c = oracle::census_poly(field, census_n, {cfg.enumeration_budget, 0});
            out << "m,f_count,r_count\n";
            for (unsigned m = 0; m <= census_n; ++m) out << m << ',' << c.f_count[m] << ',' << c.r_count[m] << '\n';
            return kExitOk;
        }
        if (census_perm->parsed()) {
            const auto c = oracle::census_perm(census_n);
            out << "m,g,p\n";
            for (unsigned m = 0; m <= census_n; ++m)
                out << m << ',' << c.g[m].fraction_str() << ',' << c.p[m].fraction_str() << '\n';
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            const auto& ids = verify::Campaign::check_ids();
            if (list_checks) {
                for (const auto& id : ids) out << id << '\n';
                return kExitOk;
            }
            verify::CampaignConfig cc;
            cc.poly_budget = cfg.enumeration_budget;
            verify::Campaign campaign(cc);
            std::vector<verify::CheckReport> reports;
            if (suite == "all") {
                for (const auto& id : ids) {
                    reports.push_back(campaign.run(id));
                    const auto& r = reports.back();
                    out << (r.pass ? "PASS " : "FAIL ") << r.id << "  worst=" << verify::format_double(r.worst_deviation)
                        << " threshold=" << verify::format_double(r.threshold) << '\n';
                }
            } else {
                reports.push_back(campaign.run(suite));
                const auto& r = reports.back();
                out << (r.pass ? "PASS " : "FAIL ") << r.id << "  worst=" << verify::format_double(r.worst_deviation)
                    << " threshold=" << verify::format_double(r.threshold) << '\n';
            }
            fs::path series = report_path;
            series.replace_extension(".series.csv");
            emit(cfg, report_path, out, [&](std::ostream& os) { os << verify::campaign_json(reports).dump(2) << '\n'; });
            emit(cfg, series.string(), out, [&](std::ostream& os) { verify::write_series_csv(os, reports); });
            const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
            return all ? kExitOk : kExitFailed;
        }

        if (estimate->parsed()) {
            const auto d = asymptotic::solve_d(cfg.u_max, cfg.step, omega_for(cfg));
            const bool perm = est_q == "-";
            const unsigned long n = est_n.value_or(1000ul * est_m);
            exact::EtaEstimate e;
            std::string name;
            if (est_kind == "cq") {
                if (perm) throw UsageError("c_q needs a field size");
                const auto q = parse_q(est_q, TableKind::f);
                e = exact::cq_estimate(*q, n, d);
                name = "c_" + est_q;
            } else if (perm) {
                e = exact::eta_perm_estimate(est_m, n, d);
                name = "eta(" + std::to_string(est_m) + ")";
            } else {
                e = exact::eta_estimate(*parse_q(est_q, TableKind::f), est_m, n, d);
                name = "eta_" + est_q + "(" + std::to_string(est_m) + ")";
            }
            out << e.label << ": " << name << " ~ " << e.value.str(10) << '\n'
                << "n = " << e.n << ", value at n/2 = " << verify::format_double(e.at_half)
                << ", drift = " << verify::format_double(e.stability) << (e.converged ? " (settled)" : " (not settled)")
                << (e.numeric ? ", floating-point tables" : ", exact tables") << '\n';
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}

}  // namespace gapdeg::cli
