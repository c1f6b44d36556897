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

#include "gapdeg/oracle/census.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "gapdeg/oracle/degree_set.hpp"

namespace gapdeg::oracle {

namespace {

using PatternId = std::uint16_t;
constexpr PatternId kUnset = std::numeric_limits<PatternId>::max();

// Interned partitions (sorted part lists) of 0..n_max with the "add a part"
// transition table.
class PatternTable {
public:
    explicit PatternTable(unsigned n_max) : n_max_(n_max) {
        std::vector<unsigned> current;
        for (unsigned total = 0; total <= n_max; ++total) build(total, total, current);
        trans_.assign(parts_.size() * (n_max + 1), kUnset);
        for (std::size_t id = 0; id < parts_.size(); ++id) {
            const unsigned sum = total_[id];
            for (unsigned d = 1; sum + d <= n_max; ++d) {
                auto next = parts_[id];
                next.insert(std::upper_bound(next.begin(), next.end(), d), d);
                trans_[id * (n_max + 1) + d] = ids_.at(next);
            }
        }
    }

    PatternId id(const std::vector<unsigned>& parts) const { return ids_.at(parts); }
    PatternId add(PatternId id, unsigned d) const { return trans_[std::size_t{id} * (n_max_ + 1) + d]; }
    const std::vector<unsigned>& parts(PatternId id) const { return parts_[id]; }
    std::size_t size() const { return parts_.size(); }

private:
    // Partitions of `remaining` into parts <= max_part, appended (descending) to `current`.
    void build(unsigned remaining, unsigned max_part, std::vector<unsigned>& current) {
        if (remaining == 0) {
            if (parts_.size() >= kUnset) throw ResourceLimitError("too many factor-degree patterns for the census");
            std::vector<unsigned> sorted(current.rbegin(), current.rend());
            ids_.emplace(sorted, static_cast<PatternId>(parts_.size()));
            unsigned s = 0;
            for (unsigned x : sorted) s += x;
            total_.push_back(s);
            parts_.push_back(std::move(sorted));
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            build(remaining - p, p, current);
            current.pop_back();
        }
    }

    unsigned n_max_;
    std::vector<std::vector<unsigned>> parts_;
    std::vector<unsigned> total_;
    std::map<std::vector<unsigned>, PatternId> ids_;
    std::vector<PatternId> trans_;
};

std::uint64_t checked_count(unsigned q, unsigned n, std::uint64_t budget) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < n; ++i) {
        v *= q;
        if (v > budget)
            throw ResourceLimitError("census of " + std::to_string(q) + "^" + std::to_string(n) +
                                     " polynomials exceeds the budget of " + std::to_string(budget));
    }
    return v;
}

// Marks pattern(P*G) for every monic G of degree e, P fixed of degree d.
void sieve_multiples(const Field& field, const FqPoly& p, unsigned e, const std::vector<PatternId>& cofactor_pat,
                     std::vector<PatternId>& target, const PatternTable& table, const std::vector<std::int64_t>& pw) {
    const unsigned q = field.order();
    const auto d = static_cast<unsigned>(p.degree());
    const unsigned n = d + e;
    std::vector<FqElem> f(n + 1, 0);  // coefficients of P*G
    for (unsigned i = 0; i <= d; ++i) f[e + i] = p.coeffs[i];
    std::int64_t idx = 0;
    for (unsigned i = 0; i < n; ++i) idx += static_cast<std::int64_t>(f[i]) * pw[i];

    std::vector<FqElem> g(e, 0);
    const auto shift_add = [&](unsigned j, FqElem delta) {  // F += delta * P * z^j
        for (unsigned i = 0; i <= d; ++i) {
            const FqElem old = f[j + i];
            const FqElem now = field.add(old, field.mul(delta, p.coeffs[i]));
            f[j + i] = now;
            idx += (static_cast<std::int64_t>(now) - static_cast<std::int64_t>(old)) * pw[j + i];
        }
    };

    const std::size_t count = cofactor_pat.size();
    for (std::size_t gi = 0;; ++gi) {
        const PatternId pat = table.add(cofactor_pat[gi], d);
        PatternId& slot = target[static_cast<std::size_t>(idx)];
        if (slot == kUnset)
            slot = pat;
        else if (slot != pat)
            throw OracleInconsistency("sieve assigned two factor patterns to one polynomial");
        if (gi + 1 == count) break;
        for (unsigned j = 0;; ++j) {  // odometer step on G's lower coefficients
            const FqElem old = g[j];
            const FqElem next = old + 1 == q ? 0 : old + 1;
            g[j] = next;
            shift_add(j, field.sub(next, old));
            if (next != 0) break;
        }
    }
}

}  // namespace

std::vector<PolyCensus> census_poly_upto(const Field& field, unsigned n_max, const CensusOptions& opts) {
    const unsigned q = field.order();
    checked_count(q, n_max, opts.budget);
    const PatternTable table(n_max);

    std::vector<std::int64_t> pw(n_max + 1, 1);
    for (unsigned i = 1; i <= n_max; ++i) pw[i] = pw[i - 1] * q;

    std::vector<std::vector<PatternId>> pat(n_max + 1);
    pat[0] = {table.id({})};
    std::vector<PolyCensus> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) {
            pat[n].assign(static_cast<std::size_t>(pw[n]), kUnset);
            for (unsigned d = 1; 2 * d <= n; ++d) {
                const PatternId prime = table.id({d});
                for (std::size_t i = 0; i < pat[d].size(); ++i)
                    if (pat[d][i] == prime)
                        sieve_multiples(field, FqPoly::from_index(field, i, d), n - d, pat[n - d], pat[n], table, pw);
            }
            const PatternId prime = table.id({n});
            for (auto& slot : pat[n])
                if (slot == kUnset) slot = prime;
        }

        std::vector<std::uint64_t> histogram(table.size(), 0);
        for (PatternId id : pat[n]) ++histogram[id];

        PolyCensus c;
        c.q = q;
        c.n = n;
        c.f_count.assign(n + 1, 0);
        c.r_count.assign(n + 1, 0);
        c.polynomials = pat[n].size();
        for (std::size_t id = 0; id < histogram.size(); ++id) {
            if (histogram[id] == 0) continue;
            const auto& parts = table.parts(static_cast<PatternId>(id));
            const unsigned gap = max_gap(DegreeSet::subset_sums(parts));
            const unsigned least = parts.empty() ? n + 1 : parts.front();
            const mpz_class cnt = static_cast<unsigned long>(histogram[id]);
            for (unsigned m = 0; m <= n; ++m) {
                const bool ok = gap <= m;
                if (ok != prefix_criterion(parts, m))
                    throw OracleInconsistency("prefix criterion disagrees with max gap at n=" + std::to_string(n) +
                                              ", m=" + std::to_string(m));
                if (ok) c.f_count[m] += cnt;
                if (least > m) c.r_count[m] += cnt;
            }
        }

        if (n > 0 && static_cast<std::uint64_t>(pw[n]) <= opts.factor_check_limit) {
            const auto irr = gen_irreducibles(field, n / 2, opts.budget);
            for (std::size_t i = 0; i < pat[n].size(); ++i) {
                const FqPoly f = FqPoly::from_index(field, i, n);
                const Factorization fact = factor(field, f, irr);
                if (!(expand(field, fact) == f))
                    throw OracleInconsistency("factorization does not reassemble: " + f.str(field));
                std::vector<unsigned> degrees;
                for (const auto& [poly, mult] : fact) degrees.insert(degrees.end(), mult, static_cast<unsigned>(poly.degree()));
                std::sort(degrees.begin(), degrees.end());
                if (degrees != table.parts(pat[n][i]))
                    throw OracleInconsistency("trial division and sieve disagree on " + f.str(field));
                ++c.factor_checked;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

PolyCensus census_poly(const Field& field, unsigned n, const CensusOptions& opts) {
    return std::move(census_poly_upto(field, n, opts).back());
}

std::vector<unsigned> CycleType::lengths() const {
    std::vector<unsigned> out;
    for (const auto& [len, count] : parts) out.insert(out.end(), count, len);
    return out;
}

std::vector<CycleType> cycle_types(unsigned n) {
    mpz_class n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), n);

    std::vector<CycleType> out;
    std::vector<std::pair<unsigned, unsigned>> current;
    // Parts chosen in increasing length; `min_len` is the next admissible length.
    const auto rec = [&](auto&& self, unsigned remaining, unsigned min_len) -> void {
        if (remaining == 0) {
            mpz_class denom = 1;
            for (const auto& [len, count] : current) {
                mpz_class lp, cf;
                mpz_ui_pow_ui(lp.get_mpz_t(), len, count);
                mpz_fac_ui(cf.get_mpz_t(), count);
                denom *= lp * cf;
            }
            out.push_back({current, n_fact / denom});
            return;
        }
        for (unsigned len = min_len; len <= remaining; ++len)
            for (unsigned count = 1; count * len <= remaining; ++count) {
                current.emplace_back(len, count);
                self(self, remaining - count * len, len + 1);
                current.pop_back();
            }
    };
    rec(rec, n, 1);
    return out;
}

PermCensus census_perm(unsigned n, unsigned max_n) {
    if (n > max_n)
        throw ResourceLimitError("permutation census for n=" + std::to_string(n) + " exceeds the limit " +
                                 std::to_string(max_n));
    const auto types = cycle_types(n);
    mpz_class n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), n);

    std::vector<mpz_class> g_num(n + 1, 0), p_num(n + 1, 0);
    mpz_class total = 0;
    for (const auto& t : types) {
        total += t.weight;
        const auto lengths = t.lengths();
        const unsigned gap = max_gap(DegreeSet::subset_sums(lengths));
        const unsigned least = t.parts.empty() ? n + 1 : t.parts.front().first;
        for (unsigned m = 0; m <= n; ++m) {
            const bool ok = gap <= m;
            if (ok != prefix_criterion(lengths, m))
                throw OracleInconsistency("prefix criterion disagrees with max gap for a cycle type of S_" +
                                          std::to_string(n));
            if (ok) g_num[m] += t.weight;
            if (least > m) p_num[m] += t.weight;
        }
    }
    if (total != n_fact) throw OracleInconsistency("cycle-type weights do not sum to n!");

    PermCensus c;
    c.n = n;
    c.types = types.size();
    for (unsigned m = 0; m <= n; ++m) {
        c.g.emplace_back(g_num[m], n_fact);
        c.p.emplace_back(p_num[m], n_fact);
    }
    return c;
}

}  // namespace gapdeg::oracle
