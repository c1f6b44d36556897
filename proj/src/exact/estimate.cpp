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

#include "gapdeg/exact/estimate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gapdeg/asymptotic/constants.hpp"
#include "gapdeg/exact/counting.hpp"
#include "gapdeg/exact/numeric.hpp"

namespace gapdeg::exact {

namespace {

struct Column {
    std::vector<double> values;
    std::vector<double> errors;
    bool numeric = false;
};

// f (q set) or g (q empty) for 0..n_max, exact up to the threshold.
Column gap_column(std::optional<FieldSize> q, unsigned m, std::size_t n_max) {
    Column c;
    if (n_max <= kExactThreshold) {
        const auto exact = q ? f_table(*q, m, n_max) : g_table(m, n_max);
        for (const auto& r : exact) c.values.push_back(r.to_double());
        c.errors.assign(c.values.size(), 0.0);
        return c;
    }
    auto t = q ? numeric_f_table(*q, m, n_max) : numeric_g_table(m, n_max);
    c.values = std::move(t.values);
    c.errors = std::move(t.abs_error);
    c.numeric = true;
    return c;
}

EtaEstimate estimate(std::optional<FieldSize> q, unsigned m, unsigned long n, const asymptotic::GridFunction& d,
                     double scale) {
    if (m == 0) throw std::invalid_argument("estimate: m must be >= 1");
    if (n < 2) throw std::invalid_argument("estimate: n must be >= 2");
    const Column col = gap_column(q, m, n);
    const auto eta_at = [&](unsigned long k) {
        return scale * col.values[k] / d(static_cast<double>(k) / m);
    };
    const double u = static_cast<double>(n) / m;
    const double dn = d(u);

    EtaEstimate out;
    out.q = q;
    out.m = m;
    out.n = n;
    out.numeric = col.numeric;
    out.value.precision_bits = 64;
    out.value.value = eta_at(n);
    out.value.error_bound = scale * (col.errors[n] / dn + col.values[n] * d.error_bound(u) / (dn * dn));
    out.at_half = eta_at(n / 2);
    out.stability = std::abs(out.value.to_double() - out.at_half);
    out.converged = out.stability <= kStabilityThreshold;
    return out;
}

}  // namespace

EtaEstimate eta_estimate(FieldSize q, unsigned m, unsigned long n, const asymptotic::GridFunction& d) {
    return estimate(q, m, n, d, 1.0);
}

EtaEstimate cq_estimate(FieldSize q, unsigned long n, const asymptotic::GridFunction& d) {
    return estimate(q, 1, n, d, asymptotic::gap_constant(64).to_double());
}

EtaEstimate eta_perm_estimate(unsigned m, unsigned long n, const asymptotic::GridFunction& d) {
    return estimate(std::nullopt, m, n, d, 1.0);
}

}  // namespace gapdeg::exact
