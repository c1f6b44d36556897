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

#include "gapdeg/exact/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "gapdeg/exact/counting.hpp"

namespace gapdeg::exact {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Weight corrections below this are dropped (and accounted in the error).
constexpr double kDropThreshold = 1e-19;

// c[k] = k I_k / q^k = sum_{d | k} mu(k/d) q^{d-k}, evaluated in double.
std::vector<double> normalized_irr_table(double q, std::size_t n_max) {
    std::vector<double> c(n_max + 1, 0.0);
    for (std::size_t e = 1; e <= n_max; ++e) {
        const int mu = moebius(e);
        if (mu == 0) continue;
        // d = k / e; the term is mu(e) q^{-(k - d)} = mu(e) q^{-d(e-1)}.
        for (std::size_t d = 1; d * e <= n_max; ++d)
            c[d * e] += mu * std::pow(q, -static_cast<double>(d * (e - 1)));
    }
    return c;
}

struct Correction {
    std::size_t index;
    double delta;
};

// Fills a column from n t(n) = P(n-m-1) + sum_i delta_i t(n-i), where P is the
// prefix sum of t. With no corrections this is the permutation recurrence.
NumericTable prefix_recurrence(unsigned m, std::size_t n_max, const std::vector<Correction>& corrections,
                               double dropped) {
    NumericTable t;
    t.values.assign(n_max + 1, 0.0);
    t.abs_error.assign(n_max + 1, 0.0);
    std::vector<double> prefix(n_max + 1, 0.0);
    std::vector<double> prefix_err(n_max + 1, 0.0);
    CompensatedSum running;
    double running_err = 0.0;

    t.values[0] = 1.0;
    running.add(1.0);
    prefix[0] = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n > m) {
            const std::size_t top = n - m - 1;
            CompensatedSum acc;
            acc.add(prefix[top]);
            double err = prefix_err[top] + kEps * prefix[top] + dropped;
            for (const auto& c : corrections) {
                if (c.index > n) break;
                const double term = c.delta * t.values[n - c.index];
                acc.add(term);
                err += std::abs(c.delta) * t.abs_error[n - c.index] + kEps * std::abs(term);
            }
            t.values[n] = acc.value() / static_cast<double>(n);
            t.abs_error[n] = err / static_cast<double>(n) + kEps * t.values[n];
        }
        running.add(t.values[n]);
        running_err += t.abs_error[n];
        prefix[n] = running.value();
        prefix_err[n] = running_err;
    }
    return t;
}

void finalize(NumericTable& t) {
    t.max_rel_error = 0.0;
    for (std::size_t n = 0; n < t.values.size(); ++n) {
        if (t.values[n] == 0.0) continue;
        t.max_rel_error = std::max(t.max_rel_error, t.abs_error[n] / std::abs(t.values[n]));
    }
    t.precision_warning = t.max_rel_error > kPrecisionWarningThreshold;
}

template <class ColumnFn>
NumericTable gap_table(unsigned m, std::size_t n_max, ColumnFn&& column) {
    std::vector<CompensatedSum> sums(n_max + 1);
    std::vector<double> sum_err(n_max + 1, 0.0);
    NumericTable t;
    t.values.assign(n_max + 1, 0.0);
    t.abs_error.assign(n_max + 1, 0.0);
    for (std::size_t k = 0; k <= n_max; ++k) {
        const double s = sums[k].value();
        t.values[k] = 1.0 - s;
        t.abs_error[k] = sum_err[k] + kEps * (1.0 + std::abs(s));
        const std::size_t c = k + m;
        if (c + 1 + k > n_max) continue;
        const NumericTable col = column(static_cast<unsigned>(c), n_max - k);
        for (std::size_t j = c + 1; j + k <= n_max; ++j) {
            const double term = t.values[k] * col.values[j];
            sums[k + j].add(term);
            sum_err[k + j] += std::abs(t.values[k]) * col.abs_error[j] + t.abs_error[k] * col.values[j] +
                              kEps * std::abs(term);
        }
    }
    finalize(t);
    return t;
}

NumericTable rough_column_from(const std::vector<double>& ck, double qd, unsigned m, std::size_t n_max) {
    // w(i) = sum_{k | i, k > m} (k I_k / q^k) q^{-k(j-1)}, i = kj; stored as w(i) - 1.
    std::vector<double> delta(n_max + 1, 0.0);
    for (std::size_t k = std::size_t{m} + 1; k <= n_max; ++k) {
        delta[k] += ck[k] - 1.0;
        const double step = std::pow(qd, -static_cast<double>(k));
        double term = ck[k] * step;
        for (std::size_t i = 2 * k; i <= n_max && term > 1e-300; i += k, term *= step) delta[i] += term;
    }
    std::vector<Correction> corrections;
    double dropped = 0.0;
    for (std::size_t i = std::size_t{m} + 1; i <= n_max; ++i) {
        if (std::abs(delta[i]) > kDropThreshold)
            corrections.push_back({i, delta[i]});
        else
            dropped += std::abs(delta[i]);
    }
    NumericTable t = prefix_recurrence(m, n_max, corrections, dropped);
    finalize(t);
    return t;
}

}  // namespace

TableKind parse_table_kind(const std::string& name) {
    if (name == "r") return TableKind::r;
    if (name == "p") return TableKind::p;
    if (name == "f") return TableKind::f;
    if (name == "g") return TableKind::g;
    throw std::invalid_argument("unknown table kind '" + name + "' (expected r, p, f or g)");
}

std::string to_string(TableKind kind) {
    switch (kind) {
        case TableKind::r: return "r";
        case TableKind::p: return "p";
        case TableKind::f: return "f";
        case TableKind::g: return "g";
    }
    return "?";
}

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

NumericTable numeric_rough_column(FieldSize q, unsigned m, std::size_t n_max) {
    const double qd = static_cast<double>(q.value());
    return rough_column_from(normalized_irr_table(qd, n_max), qd, m, n_max);
}

NumericTable numeric_perm_column(unsigned m, std::size_t n_max) {
    NumericTable t = prefix_recurrence(m, n_max, {}, 0.0);
    finalize(t);
    return t;
}

NumericTable numeric_f_table(FieldSize q, unsigned m, std::size_t n_max) {
    const double qd = static_cast<double>(q.value());
    const auto ck = normalized_irr_table(qd, n_max);
    return gap_table(m, n_max, [&](unsigned c, std::size_t len) { return rough_column_from(ck, qd, c, len); });
}

NumericTable numeric_g_table(unsigned m, std::size_t n_max) {
    return gap_table(m, n_max, [](unsigned c, std::size_t len) { return numeric_perm_column(c, len); });
}

NumericTable numeric_table(TableKind kind, std::optional<FieldSize> q, unsigned m, std::size_t n_max) {
    if ((kind == TableKind::r || kind == TableKind::f) && !q)
        throw std::invalid_argument("polynomial tables need a field size q");
    switch (kind) {
        case TableKind::r: return numeric_rough_column(*q, m, n_max);
        case TableKind::p: return numeric_perm_column(m, n_max);
        case TableKind::f: return numeric_f_table(*q, m, n_max);
        case TableKind::g: return numeric_g_table(m, n_max);
    }
    throw std::logic_error("unreachable");
}

OverlapReport validate_overlap(TableKind kind, std::optional<FieldSize> q, unsigned m, std::size_t lo,
                               std::size_t hi) {
    if (lo > hi) throw std::invalid_argument("empty overlap range");
    const NumericTable num = numeric_table(kind, q, m, hi);
    std::vector<ExactRatio> ex;
    switch (kind) {
        case TableKind::r: {
            const auto table = rough_table_rec(*q, m, hi);
            mpz_class qn = 1;
            for (std::size_t n = 0; n <= hi; ++n, qn *= q->value()) ex.emplace_back(table.counts[n], qn);
            break;
        }
        case TableKind::p: ex = perm_rough_table(m, hi); break;
        case TableKind::f: ex = f_table(*q, m, hi); break;
        case TableKind::g: ex = g_table(m, hi); break;
    }
    OverlapReport rep;
    for (std::size_t n = lo; n <= hi; ++n) {
        const double e = ex[n].to_double();
        const double dev = e == 0.0 ? std::abs(num.values[n]) : std::abs(num.values[n] / e - 1.0);
        if (dev > rep.max_rel_deviation) {
            rep.max_rel_deviation = dev;
            rep.worst_n = n;
        }
    }
    rep.ok = rep.max_rel_deviation < 1e-10;
    return rep;
}

}  // namespace gapdeg::exact
