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

#include "gapdeg/verify/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gapdeg/asymptotic/buchstab.hpp"
#include "gapdeg/asymptotic/constants.hpp"
#include "gapdeg/asymptotic/dfunc.hpp"
#include "gapdeg/exact/counting.hpp"
#include "gapdeg/exact/estimate.hpp"
#include "gapdeg/exact/numeric.hpp"
#include "gapdeg/exact/real.hpp"
#include "gapdeg/oracle/census.hpp"

namespace gapdeg::verify {

using asymptotic::PredictorKind;
using exact::FieldSize;

namespace {

constexpr std::size_t kMaxNotes = 10;

double rel(double computed, double predicted) {
    return predicted == 0.0 ? std::abs(computed) : std::abs(computed / predicted - 1.0);
}

SeriesRow row(std::string kind, std::optional<unsigned> q, unsigned long n, unsigned m, double computed,
              double predicted) {
    return {std::move(kind), q, n, m, computed, predicted, rel(computed, predicted)};
}

// (u/e)^{-u}
double super_exp_shape(double u) { return std::pow(u / std::numbers::e, -u); }

BigFloat to_big(const mpq_class& x) {
    BigFloat b;
    mpfr_set_q(b.backend().data(), x.get_mpq_t(), MPFR_RNDN);
    return b;
}

std::string join(const std::vector<unsigned>& xs) {
    std::string s;
    for (unsigned x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "{" + s + "}";
}

void note(CheckReport& r, std::string text) {
    if (r.notes.size() < kMaxNotes) r.notes.push_back(std::move(text));
}

}  // namespace

CheckReport fitted_check(std::string id, std::string statement, std::string params,
                         const std::vector<FitSample>& samples, double noise_floor, double growth) {
    CheckReport r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.params = std::move(params);
    double b_train = 0.0, b_all = 0.0;
    std::size_t n_train = 0, n_all = 0;
    for (const auto& s : samples) {
        r.series.push_back(s.row);
        if (!(s.shape > 0.0)) continue;
        const double ratio = std::max(s.deviation - noise_floor, 0.0) / s.shape;
        b_all = std::max(b_all, ratio);
        ++n_all;
        if (s.training) {
            b_train = std::max(b_train, ratio);
            ++n_train;
        }
    }
    r.worst_deviation = b_all;
    r.threshold = growth * b_train;
    r.decide();
    r.notes.push_back("fitted constant B = " + format_double(b_train) + " over " + std::to_string(n_train) +
                      " training samples");
    r.notes.push_back("largest ratio over all " + std::to_string(n_all) + " samples = " + format_double(b_all) +
                      " (allowed " + format_double(growth) + " B)");
    return r;
}

CheckReport check_oracle_equivalence(const std::vector<unsigned>& q_list, std::uint64_t budget, unsigned n_max_perm,
                                     std::uint64_t factor_check_limit) {
    CheckReport r;
    r.id = "oracle";
    r.statement = "recurrence tables for f, r, g, p equal brute-force censuses exactly";
    std::ostringstream params;
    params << "polynomials q in " << join(q_list) << " with q^n <= " << budget << " (n_max:";
    std::size_t mismatches = 0, cells = 0;

    for (unsigned qv : q_list) {
        const auto field = oracle::Field::of_order(qv);
        unsigned n_max = 0;
        for (std::uint64_t size = qv; size <= budget; size *= qv) ++n_max;
        params << ' ' << qv << ':' << n_max;
        const auto census = oracle::census_poly_upto(field, n_max, {budget, factor_check_limit});
        const FieldSize q(qv);
        for (unsigned m = 0; m <= n_max; ++m) {
            const auto fc = exact::f_counts(q, m, n_max);
            const auto rt = exact::rough_table_rec(q, m, n_max);
            for (unsigned n = 0; n <= n_max; ++n) {
                const auto& c = census[n];
                const mpz_class want_f = c.f_count[std::min(m, n)];
                const mpz_class want_r = m <= n ? c.r_count[m] : mpz_class(n == 0 ? 1 : 0);
                cells += 2;
                if (fc[n] != want_f) {
                    ++mismatches;
                    note(r, "f mismatch q=" + std::to_string(qv) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
                }
                if (rt.counts[n] != want_r) {
                    ++mismatches;
                    note(r, "r mismatch q=" + std::to_string(qv) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
                }
            }
        }
    }
    params << "); permutations n <= " << n_max_perm;

    std::vector<std::vector<exact::ExactRatio>> g_cols, p_cols;
    for (unsigned m = 0; m <= n_max_perm; ++m) {
        g_cols.push_back(exact::g_table(m, n_max_perm));
        p_cols.push_back(exact::perm_rough_table(m, n_max_perm));
    }
    for (unsigned n = 0; n <= n_max_perm; ++n) {
        const auto c = oracle::census_perm(n, std::max(n_max_perm, oracle::kDefaultPermCensusMax));
        for (unsigned m = 0; m <= n_max_perm; ++m) {
            const auto& want_g = c.g[std::min(m, n)];
            const exact::ExactRatio want_p = m <= n ? c.p[m] : exact::ExactRatio(mpq_class(n == 0 ? 1 : 0));
            cells += 2;
            if (!(g_cols[m][n] == want_g)) {
                ++mismatches;
                note(r, "g mismatch n=" + std::to_string(n) + " m=" + std::to_string(m));
            }
            if (!(p_cols[m][n] == want_p)) {
                ++mismatches;
                note(r, "p mismatch n=" + std::to_string(n) + " m=" + std::to_string(m));
            }
        }
    }
    r.params = params.str();
    r.worst_deviation = static_cast<double>(mismatches);
    r.threshold = 0.0;
    r.decide();
    r.notes.insert(r.notes.begin(), std::to_string(cells) + " cells compared, " + std::to_string(mismatches) +
                                        " mismatches");
    return r;
}

CheckReport check_identities(const CampaignConfig& cfg) {
    CheckReport r;
    r.id = "identities";
    r.statement =
        "partial sums of f(k,m) lambda_q(k+m) and g(k,m) e^{-H_{k+m}} increase towards 1; "
        "f(n,m+1) <= q f(n+1,m) exactly";
    const unsigned K = cfg.identity_k;
    std::size_t violations = 0;
    PrecisionGuard guard(kDefaultPrecisionBits);

    for (unsigned m : {1u, 2u}) {
        const auto f = exact::f_table(FieldSize(2), m, K);
        const auto g = exact::g_table(m, K);
        BigFloat sf = 0, sg = 0;
        double prev_f = -1.0, prev_g = -1.0;
        for (unsigned k = 0; k <= K; ++k) {
            sf += to_big(f[k].value()) * exact::lambda_q(FieldSize(2), k + m).value;
            sg += to_big(g[k].value()) * exp(-exact::harmonic(k + m).value);
            const double df = sf.convert_to<double>(), dg = sg.convert_to<double>();
            if (!(df > prev_f) || !(dg > prev_g) || df >= 1.0 || dg >= 1.0) ++violations;
            prev_f = df;
            prev_g = dg;
            if (k % 25 == 0 || k == K) {
                r.series.push_back(row("se_partial_sum", 2u, k, m, df, 1.0));
                r.series.push_back(row("sep_partial_sum", std::nullopt, k, m, dg, 1.0));
            }
        }
        const bool in_f = prev_f > 0.98 && prev_f < 1.0, in_g = prev_g > 0.98 && prev_g < 1.0;
        if (!in_f || !in_g) ++violations;
        r.notes.push_back("m=" + std::to_string(m) + ", K=" + std::to_string(K) + ": polynomial sum " +
                          format_double(prev_f) + ", permutation sum " + format_double(prev_g));
    }

    std::size_t cells = 0;
    for (unsigned qv : {2u, 3u, 5u}) {
        const FieldSize q(qv);
        std::vector<std::vector<exact::ExactRatio>> cols;
        for (unsigned m = 0; m <= cfg.lb_n_max + 1; ++m) cols.push_back(exact::f_table(q, m, cfg.lb_n_max + 1));
        for (unsigned m = 1; m <= cfg.lb_n_max; ++m)
            for (unsigned n = 0; n <= cfg.lb_n_max; ++n) {
                ++cells;
                if (!(cols[m + 1][n].value() <= qv * cols[m][n + 1].value())) {
                    ++violations;
                    note(r, "f(n,m+1) <= q f(n+1,m) fails at q=" + std::to_string(qv) + " n=" + std::to_string(n) +
                                " m=" + std::to_string(m));
                }
            }
    }
    r.notes.push_back(std::to_string(cells) + " cells checked for f(n,m+1) <= q f(n+1,m)");
    r.params = "K <= " + std::to_string(K) + ", m in {1,2}, q=2; inequality for q in {2,3,5}, n,m <= " +
               std::to_string(cfg.lb_n_max);
    r.worst_deviation = static_cast<double>(violations);
    r.threshold = 0.0;
    r.decide();
    return r;
}

// ---------------------------------------------------------------------------

struct Campaign::Tables {
    std::map<std::pair<unsigned, unsigned>, exact::NumericTable> numeric;  // (q or 0 for g, m)
    std::map<std::tuple<unsigned, unsigned, unsigned>, std::vector<mpq_class>> rough;
    std::map<std::pair<unsigned, unsigned>, std::vector<mpq_class>> perm;

    const std::vector<double>& gap(unsigned q, unsigned m, std::size_t n_max) {
        auto it = numeric.find({q, m});
        if (it == numeric.end() || it->second.values.size() <= n_max) {
            auto t = q == 0 ? exact::numeric_g_table(m, n_max) : exact::numeric_f_table(FieldSize(q), m, n_max);
            it = numeric.insert_or_assign({q, m}, std::move(t)).first;
        }
        return it->second.values;
    }

    const std::vector<mpq_class>& r(unsigned q, unsigned m, unsigned n_max) {
        auto it = rough.find({q, m, n_max});
        if (it != rough.end()) return it->second;
        const auto t = exact::rough_table_rec(FieldSize(q), m, n_max);
        std::vector<mpq_class> out;
        mpz_class qn = 1;
        for (unsigned n = 0; n <= n_max; ++n, qn *= q) {
            mpq_class v(t.counts[n], qn);
            v.canonicalize();
            out.push_back(v);
        }
        return rough.emplace(std::make_tuple(q, m, n_max), std::move(out)).first->second;
    }

    const std::vector<mpq_class>& p(unsigned m, unsigned n_max) {
        auto it = perm.find({m, n_max});
        if (it != perm.end()) return it->second;
        std::vector<mpq_class> out;
        for (const auto& x : exact::perm_rough_table(m, n_max)) out.push_back(x.value());
        return perm.emplace(std::make_pair(m, n_max), std::move(out)).first->second;
    }
};

Campaign::Campaign(CampaignConfig cfg) : cfg_(std::move(cfg)), tables_(std::make_unique<Tables>()) {}
Campaign::~Campaign() = default;

const std::vector<std::string>& Campaign::check_ids() {
    static const std::vector<std::string> ids{
        "oracle",        "dual",         "overlap",      "identities",  "cq_stability",   "rough_buchstab",
        "rough_simple",  "rough_lambda", "eta_stability", "f_cq",       "f_C",            "f_d",
        "ng_limit",      "g_d",          "g_C",          "rough_vs_perm", "lambda_harmonic", "f_vs_g",
        "perm_buchstab", "perm_simple",
    };
    return ids;
}

const asymptotic::Predictor& Campaign::predictor() {
    if (!predictor_) predictor_ = std::make_unique<asymptotic::Predictor>(asymptotic::Predictor::standard());
    return *predictor_;
}

CheckReport Campaign::run(const std::string& id) {
    const auto& ids = check_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw std::invalid_argument("unknown check id '" + id + "'");
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport r = dispatch(id);
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CheckReport> Campaign::run_all() {
    std::vector<CheckReport> out;
    for (const auto& id : check_ids()) out.push_back(run(id));
    return out;
}

CheckReport Campaign::dispatch(const std::string& id) {
    const double C = asymptotic::gap_constant(64).to_double();
    const unsigned long N = cfg_.numeric_n;
    if (id == "oracle")
        return check_oracle_equivalence(cfg_.poly_q, cfg_.poly_budget, cfg_.perm_n_max, cfg_.factor_check_limit);
    if (id == "identities") return check_identities(cfg_);

    if (id == "dual") {
        CheckReport r;
        r.id = id;
        r.statement = "R(n,m) from the product expansion equals R(n,m) from the recurrence";
        r.params = "q in " + join(cfg_.dual_q) + ", n <= " + std::to_string(cfg_.dual_n_max) +
                   ", m <= " + std::to_string(cfg_.dual_m_max);
        std::size_t bad = 0;
        for (unsigned qv : cfg_.dual_q)
            for (unsigned m = 0; m <= cfg_.dual_m_max; ++m) {
                const auto a = exact::rough_table_gf(FieldSize(qv), m, cfg_.dual_n_max);
                const auto b = exact::rough_table_rec(FieldSize(qv), m, cfg_.dual_n_max);
                for (unsigned n = 0; n <= cfg_.dual_n_max; ++n)
                    if (a.counts[n] != b.counts[n]) {
                        ++bad;
                        note(r, "q=" + std::to_string(qv) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
                    }
            }
        r.worst_deviation = static_cast<double>(bad);
        r.threshold = 0.0;
        r.decide();
        return r;
    }

    if (id == "overlap") {
        CheckReport r;
        r.id = id;
        r.statement = "floating-point tables agree with exact tables on n in [150, 200]";
        r.params = "r, f for q in {2,3}; p, g; m in {1,2,3}";
        r.threshold = 1e-10;
        const auto run_one = [&](exact::TableKind kind, std::optional<FieldSize> q, unsigned m) {
            const auto rep = exact::validate_overlap(kind, q, m);
            r.worst_deviation = std::max(r.worst_deviation, rep.max_rel_deviation);
            note(r, exact::to_string(kind) + (q ? " q=" + std::to_string(q->value()) : std::string()) +
                        " m=" + std::to_string(m) + ": " + format_double(rep.max_rel_deviation) + " at n=" +
                        std::to_string(rep.worst_n));
        };
        for (unsigned m = 1; m <= 3; ++m) {
            for (unsigned qv : {2u, 3u}) {
                run_one(exact::TableKind::r, FieldSize(qv), m);
                run_one(exact::TableKind::f, FieldSize(qv), m);
            }
            run_one(exact::TableKind::p, std::nullopt, m);
            run_one(exact::TableKind::g, std::nullopt, m);
        }
        r.decide();
        return r;
    }

    if (id == "cq_stability") {
        CheckReport r;
        r.id = id;
        r.statement = "c_hat_2 = C f(n,1)/d(n) settles as n doubles (estimate; no reference value exists)";
        r.params = "q=2, n=" + std::to_string(N / 2) + " vs " + std::to_string(N);
        const auto est = exact::cq_estimate(FieldSize(2), N, predictor().d());
        r.worst_deviation = std::abs(est.value.to_double() / est.at_half - 1.0);
        r.threshold = cfg_.cq_stability;
        r.decide();
        const auto& f = tables_->gap(2, 1, N);
        for (unsigned long n = N / 16; n <= N; n *= 2)
            r.series.push_back(row("cq_estimate", 2u, n, 1, C * f[n] / predictor().d()(static_cast<double>(n)), C));
        r.notes.push_back(est.label + ": c_2 ~ " + format_double(est.value.to_double()) + " at n=" + std::to_string(N) +
                          ", " + format_double(est.at_half) + " at n=" + std::to_string(N / 2));
        return r;
    }

    if (id == "eta_stability") {
        CheckReport r;
        r.id = id;
        r.statement = "eta_hat_q(m) = f(n,m)/d(n/m) settles as n doubles and approaches 1 as m grows (estimate)";
        r.params = "q=2, m in {1,2,3}, n=" + std::to_string(N / 2) + " vs " + std::to_string(N);
        for (unsigned m = 1; m <= 3; ++m) {
            const auto est = exact::eta_estimate(FieldSize(2), m, N, predictor().d());
            r.worst_deviation = std::max(r.worst_deviation, est.stability);
            r.series.push_back(row("eta_estimate", 2u, N, m, est.value.to_double(), 1.0));
            r.notes.push_back(est.label + ": eta_2(" + std::to_string(m) + ") ~ " +
                              format_double(est.value.to_double()) + ", drift " + format_double(est.stability));
        }
        r.threshold = cfg_.eta_stability;
        r.decide();
        return r;
    }

    if (id == "ng_limit") {
        CheckReport r;
        r.id = id;
        r.statement = "n g(n,1) -> C with error decaying in n";
        const unsigned long n0 = cfg_.decay_reference_n;
        r.params = "n=" + std::to_string(N) + " (reference n=" + std::to_string(n0) + ")";
        const auto& g = tables_->gap(0, 1, N);
        const double far = std::abs(N * g[N] - C), near = std::abs(n0 * g[n0] - C);
        // Normalized: both conditions hold iff the score is <= 1.
        r.worst_deviation = std::max(far / C / cfg_.ng_tolerance, far / near);
        r.threshold = 1.0;
        r.decide();
        for (unsigned long n = 125; n <= N; n *= 2) r.series.push_back(row("ng_limit", std::nullopt, n, 1, n * g[n], C));
        r.notes.push_back("|n g(n,1)/C - 1| = " + format_double(far / C) + " at n=" + std::to_string(N) +
                          " (tolerance " + format_double(cfg_.ng_tolerance) + ")");
        r.notes.push_back("|n g(n,1) - C|: " + format_double(near) + " at n=" + std::to_string(n0) + ", " +
                          format_double(far) + " at n=" + std::to_string(N));
        return r;
    }

    if (id == "g_d") {
        CheckReport r;
        r.id = id;
        r.statement = "g(n,m) / d(n/m) -> 1";
        r.params = "m in {1,2,3}, n=" + std::to_string(N);
        for (unsigned m = 1; m <= 3; ++m) {
            const auto& g = tables_->gap(0, m, N);
            for (unsigned long n = 125; n <= N; n *= 2)
                r.series.push_back(row("g_d", std::nullopt, n, m, g[n], predictor()(PredictorKind::g_density, std::nullopt, n, m)));
            const double dev = rel(g[N], predictor()(PredictorKind::g_density, std::nullopt, N, m));
            r.worst_deviation = std::max(r.worst_deviation, dev);
            r.notes.push_back("m=" + std::to_string(m) + ": |g/d - 1| = " + format_double(dev));
        }
        r.threshold = cfg_.gd_tolerance;
        r.decide();
        return r;
    }

    if (id == "lambda_harmonic") {
        CheckReport r;
        r.id = id;
        r.statement = "lambda_2(m) e^{H_m} -> 1 at rate about m^-1 2^{-(m+1)/2}";
        r.params = "q=2, m=1..30";
        PrecisionGuard guard(kDefaultPrecisionBits);
        std::vector<double> dev(31, 0.0);
        for (unsigned m = 1; m <= 30; ++m) {
            const BigFloat v = exact::lambda_q(FieldSize(2), m).value * exp(exact::harmonic(m).value);
            dev[m] = abs(v - 1).convert_to<double>();
            r.series.push_back(row("lambda_harmonic", 2u, 0, m, v.convert_to<double>(), 1.0));
        }
        const double shrink = dev[12] / dev[10];
        r.worst_deviation = std::max(dev[30] / 1e-4, shrink / 0.5);
        r.threshold = 1.0;
        r.decide();
        r.notes.push_back("deviation m=10: " + format_double(dev[10]) + ", m=12: " + format_double(dev[12]) +
                          " (ratio " + format_double(shrink) + ", must be <= 0.5)");
        r.notes.push_back("deviation m=30: " + format_double(dev[30]) + " (must be <= 1e-4)");
        return r;
    }

    const auto& pred = predictor();
    const auto kc = asymptotic::constants(64, pred.omega());
    const double kappa = kc.kappa.to_double(), tau = kc.tau.to_double();

    // Fitted-constant checks.
    std::vector<FitSample> s;
    const auto add = [&](double dev, double shape, bool train, SeriesRow rw) { s.push_back({dev, shape, train, std::move(rw)}); };

    if (id == "rough_vs_perm") {
        for (unsigned qv : {2u, 3u})
            for (unsigned n = 1; n <= 40; ++n)
                for (unsigned m = 1; m <= n; ++m) {
                    const mpq_class& rv = tables_->r(qv, m, 40)[n];
                    const mpq_class& pv = tables_->p(m, 40)[n];
                    const double dev = mpq_class(abs(rv - pv)).get_d();
                    const double shape = 1.0 / (n * std::pow(qv, n / 2.0)) + 1.0 / (double(m) * m * std::pow(qv, (m + 1) / 2.0));
                    add(dev, shape, qv == 2 && n <= 30, row("rough_vs_perm", qv, n, m, rv.get_d(), pv.get_d()));
                }
        return fitted_check(id, "|r(n,m) - p(n,m)| <= B (1/(n q^{n/2}) + 1/(m^2 q^{(m+1)/2}))",
                            "B fitted on q=2, n <= 30; checked on q in {2,3}, n <= 40, 1 <= m <= n", s, 0.0,
                            cfg_.fit_growth);
    }

    if (id == "rough_buchstab" || id == "rough_simple" || id == "rough_lambda") {
        PrecisionGuard guard(kDefaultPrecisionBits);
        for (unsigned qv : {2u, 3u, 5u})
            for (unsigned m = 1; m < 40; ++m) {
                const auto lam = exact::lambda_q(FieldSize(qv), m);
                for (unsigned n = m + 1; n <= 40; ++n) {
                    const double u = double(n) / m;
                    const mpq_class& rv = tables_->r(qv, m, 40)[n];
                    const bool train = qv == 2 && n <= 30;
                    if (id == "rough_buchstab") {
                        if (u > asymptotic::kBuchstabTailStart) continue;
                        const double p = pred(PredictorKind::r_buchstab, FieldSize(qv), n, m);
                        add(rel(rv.get_d(), p), super_exp_shape(u) / m, train, row(id, qv, n, m, rv.get_d(), p));
                    } else if (id == "rough_simple") {
                        const double p = pred.omega()(u) / m;
                        add(rel(rv.get_d(), p), 1.0 / m, train, row(id, qv, n, m, rv.get_d(), p));
                    } else {
                        const double dev = abs(to_big(rv) / lam.value - 1).convert_to<double>();
                        add(dev, super_exp_shape(u), train, row(id, qv, n, m, rv.get_d(), lam.to_double()));
                    }
                }
            }
        const std::string params = "B fitted on q=2, n <= 30; checked on q in {2,3,5}, n <= 40, 1 <= m < n";
        if (id == "rough_buchstab")
            return fitted_check(id, "r(n,m) = lambda_q(m) e^gamma w(n/m) (1 + O((u/e)^-u / m))", params + ", u <= 12", s,
                                1e-11, cfg_.fit_growth);
        if (id == "rough_simple")
            return fitted_check(id, "r(n,m) = w(n/m)/m (1 + O(1/m))", params, s, 1e-11, cfg_.fit_growth);
        return fitted_check(id, "r(n,m) = lambda_q(m) (1 + O((u/e)^-u))", params, s, 1e-60, cfg_.fit_growth);
    }

    if (id == "perm_buchstab" || id == "perm_simple") {
        for (unsigned m = 1; m < 60; ++m)
            for (unsigned n = m + 1; n <= 60; ++n) {
                const double u = double(n) / m;
                const double pv = tables_->p(m, 60)[n].get_d();
                const bool train = n <= 30;
                if (id == "perm_buchstab") {
                    if (u > asymptotic::kBuchstabTailStart) continue;
                    const double p = pred(PredictorKind::p_buchstab, std::nullopt, n, m);
                    add(rel(pv, p), super_exp_shape(u) / m, train, row(id, std::nullopt, n, m, pv, p));
                } else {
                    const double p = pred(PredictorKind::p_simple, std::nullopt, n, m);
                    add(rel(pv, p), 1.0 / m, train, row(id, std::nullopt, n, m, pv, p));
                }
            }
        const std::string params = "B fitted on n <= 30; checked on n <= 60, 1 <= m < n";
        if (id == "perm_buchstab")
            return fitted_check(id, "p(n,m) = e^{gamma - H_m} w(n/m) (1 + O((u/e)^-u / m))", params + ", u <= 12", s,
                                1e-11, cfg_.fit_growth);
        return fitted_check(id, "p(n,m) = w(n/m)/m (1 + O(1/m))", params, s, 1e-11, cfg_.fit_growth);
    }

    if (id == "f_cq" || id == "f_C" || id == "f_d" || id == "g_C" || id == "f_vs_g") {
        const bool perm = id == "g_C";
        const std::vector<unsigned> qs = perm ? std::vector<unsigned>{0} : std::vector<unsigned>{2, 3};
        const unsigned long train_n = N / 2;
        for (unsigned qv : qs)
            for (unsigned m = 1; m <= 3; ++m) {
                const auto& f = tables_->gap(qv, m, N);
                const auto& g = tables_->gap(0, m, N);
                const double qpen = qv == 0 ? 0.0 : 1.0 / (m * std::pow(qv, (m + 1) * tau));
                double cqm = 0.0;
                if (id == "f_cq") cqm = C * f[N] / pred.d()(double(N) / m);
                const std::optional<unsigned> qq = qv == 0 ? std::nullopt : std::optional<unsigned>(qv);
                for (unsigned long n = 1; n <= N; ++n) {
                    const double nd = double(n), md = m;
                    const bool train = (perm || qv == 2) && n <= train_n;
                    if (id == "f_cq") {
                        if (n < m) continue;
                        const double p = cqm * md / (nd + md);
                        add(rel(f[n], p), md * md / (nd * nd) + 1.0 / nd, train, row(id, qq, n, m, f[n], p));
                    } else if (id == "f_C" || id == "g_C") {
                        if (n < m) continue;
                        const double v = perm ? g[n] : f[n];
                        const double p = pred(PredictorKind::g_reciprocal, std::nullopt, n, m);
                        add(rel(v, p), md * md / (nd * nd) + 1.0 / nd + qpen, train, row(id, qq, n, m, v, p));
                    } else if (id == "f_d") {
                        const double p = pred(PredictorKind::f_density, std::nullopt, n, m);
                        add(rel(f[n], p), 1.0 / (nd + md) + qpen, train, row(id, qq, n, m, f[n], p));
                    } else {
                        const double shape = std::pow(nd, kappa) / (std::pow(md, 1.0 + kappa) * std::pow(qv, (m + 1) / 2.0));
                        add(std::abs(f[n] - g[n]), shape, train, row(id, qq, n, m, f[n], g[n]));
                    }
                }
            }
        const std::string range = "m in {1,2,3}; B fitted on n <= " + std::to_string(train_n) + (perm ? "" : ", q=2") +
                                  "; checked on n <= " + std::to_string(N) + (perm ? "" : ", q in {2,3}");
        if (id == "f_cq")
            return fitted_check(id, "f(n,m) = c_q(m) m/(n+m) (1 + O(m^2/n^2 + 1/n)), c_q(m) estimated at n_max",
                                range, s, 1e-9, cfg_.fit_growth);
        if (id == "f_C")
            return fitted_check(id, "f(n,m) = C m/(n+m) (1 + O(m^2/n^2 + 1/n + 1/(m q^{(m+1) tau})))", range, s,
                                1e-9, cfg_.fit_growth);
        if (id == "f_d")
            return fitted_check(id, "f(n,m) = d(n/m) (1 + O(1/(n+m) + 1/(m q^{(m+1) tau})))", range, s, 1e-9,
                                cfg_.fit_growth);
        if (id == "g_C")
            return fitted_check(id, "g(n,m) = C m/(n+m) (1 + O(m^2/n^2 + 1/n))", range, s, 1e-9, cfg_.fit_growth);
        return fitted_check(id, "|f(n,m) - g(n,m)| <= B n^kappa / (m^{1+kappa} q^{(m+1)/2})", range, s, 1e-12,
                            cfg_.fit_growth);
    }

    throw std::logic_error("check id '" + id + "' has no implementation");
}

CheckReport check_theorem(const std::string& kind, const CampaignConfig& cfg) {
    Campaign c(cfg);
    return c.run(kind);
}

}  // namespace gapdeg::verify
