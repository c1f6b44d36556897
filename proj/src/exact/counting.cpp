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

#include "gapdeg/exact/counting.hpp"

#include <map>
#include <string>

namespace gapdeg::exact {

namespace {

mpz_class pow_ui(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

void check_cap(const TruncatedSeries& s) {
    if (s.max_bits() > kCoefficientBitCap)
        throw ResourceLimitError("rough series coefficient exceeds " + std::to_string(kCoefficientBitCap) +
                                 " bits");
}

// (1 - z^k)^e truncated at `bound`, by square-and-multiply on the exponent bits.
TruncatedSeries binomial_power(std::size_t k, const mpz_class& e, std::size_t bound) {
    TruncatedSeries base = TruncatedSeries::one(bound);
    if (k <= bound) base[k] = -1;
    TruncatedSeries result = TruncatedSeries::one(bound);
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        result *= result;
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result *= base;
        check_cap(result);
    }
    return result;
}

// Recurrence core shared by rough_table_rec and the f-table column builder.
std::vector<mpz_class> rough_counts_rec(const std::vector<mpz_class>& irr, unsigned m, std::size_t n_max) {
    // weight[i] = sum over k | i, k > m of k I_k.
    std::vector<mpz_class> weight(n_max + 1);
    for (std::size_t k = std::size_t{m} + 1; k <= n_max; ++k) {
        const mpz_class kik = irr[k] * static_cast<unsigned long>(k);
        for (std::size_t i = k; i <= n_max; i += k) weight[i] += kik;
    }
    std::vector<mpz_class> r(n_max + 1);
    r[0] = 1;
    mpz_class acc;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n <= m) continue;
        acc = 0;
        for (std::size_t i = std::size_t{m} + 1; i <= n; ++i) {
            const std::size_t rest = n - i;
            if (rest != 0 && rest <= m) continue;
            mpz_addmul(acc.get_mpz_t(), weight[i].get_mpz_t(), r[rest].get_mpz_t());
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), n))
            throw std::logic_error("rough recurrence produced a non-integral count");
        mpz_divexact_ui(r[n].get_mpz_t(), acc.get_mpz_t(), n);
    }
    return r;
}

std::vector<ExactRatio> perm_rough_impl(unsigned m, std::size_t n_max) {
    std::vector<mpq_class> p(n_max + 1);
    std::vector<mpq_class> prefix(n_max + 1);  // prefix[t] = sum_{m<k<=t} p(k)
    p[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n > m) {
            mpq_class s = 1;
            if (n >= 2 * std::size_t{m} + 2) s += prefix[n - m - 1];
            p[n] = s / static_cast<unsigned long>(n);
            p[n].canonicalize();
        }
        prefix[n] = (n > m ? prefix[n - 1] + p[n] : mpq_class(0));
    }
    std::vector<ExactRatio> out;
    out.reserve(n_max + 1);
    for (auto& v : p) out.emplace_back(std::move(v));
    return out;
}

}  // namespace

int moebius(unsigned long n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

mpz_class irr_count(FieldSize q, long n) {
    if (n <= 0) throw std::invalid_argument("irr_count: degree must be >= 1");
    const auto un = static_cast<unsigned long>(n);
    mpz_class sum = 0;
    for (unsigned long d = 1; d <= un; ++d) {
        if (un % d != 0) continue;
        const int mu = moebius(un / d);
        if (mu > 0)
            sum += pow_ui(q.value(), d);
        else if (mu < 0)
            sum -= pow_ui(q.value(), d);
    }
    mpz_class out;
    mpz_divexact_ui(out.get_mpz_t(), sum.get_mpz_t(), un);
    return out;
}

std::vector<mpz_class> irr_counts(FieldSize q, std::size_t n_max) {
    std::vector<mpz_class> irr(n_max + 1);
    for (std::size_t k = 1; k <= n_max; ++k) irr[k] = irr_count(q, static_cast<long>(k));
    return irr;
}

RoughTable rough_table_gf(FieldSize q, unsigned m, std::size_t n_max) {
    const auto irr = irr_counts(q, std::min<std::size_t>(m, n_max));
    TruncatedSeries prod = TruncatedSeries::one(n_max);
    for (std::size_t k = 1; k <= m && k <= n_max; ++k) {
        prod *= binomial_power(k, irr[k], n_max);
        check_cap(prod);
    }
    // Multiply by 1/(1 - qz): R(n) = q R(n-1) + P(n).
    RoughTable table{q, m, std::vector<mpz_class>(n_max + 1)};
    table.counts[0] = prod[0];
    for (std::size_t n = 1; n <= n_max; ++n) table.counts[n] = table.counts[n - 1] * q.value() + prod[n];
    return table;
}

RoughTable rough_table_rec(FieldSize q, unsigned m, std::size_t n_max) {
    return RoughTable{q, m, rough_counts_rec(irr_counts(q, n_max), m, n_max)};
}

ExactRatio r_ratio(FieldSize q, unsigned n, unsigned m) {
    const auto table = rough_table_rec(q, m, n);
    return ExactRatio(table.counts[n], pow_ui(q.value(), n));
}

std::vector<ExactRatio> perm_rough_table(unsigned m, std::size_t n_max) { return perm_rough_impl(m, n_max); }

ExactRatio perm_rough(unsigned n, unsigned m) { return perm_rough_impl(m, n)[n]; }

std::vector<mpz_class> f_counts(FieldSize q, unsigned m, std::size_t n_max) {
    const auto irr = irr_counts(q, n_max);
    std::map<std::size_t, std::vector<mpz_class>> columns;  // second argument c -> R(., c)
    auto column = [&](std::size_t c) -> const std::vector<mpz_class>& {
        auto it = columns.find(c);
        if (it == columns.end())
            it = columns.emplace(c, rough_counts_rec(irr, static_cast<unsigned>(c), n_max - (c - m))).first;
        return it->second;
    };

    std::vector<mpz_class> a(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        mpz_class v = pow_ui(q.value(), n);
        // Only k with n - k > k + m contribute; the rest have R(n-k, k+m) = 0.
        for (std::size_t k = 0; 2 * k + m < n; ++k) v -= a[k] * column(k + m)[n - k];
        if (sgn(v) < 0) throw std::logic_error("negative gap-free count");
        a[n] = std::move(v);
    }
    return a;
}

std::vector<ExactRatio> f_table(FieldSize q, unsigned m, std::size_t n_max) {
    const auto counts = f_counts(q, m, n_max);
    std::vector<ExactRatio> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.emplace_back(counts[n], pow_ui(q.value(), n));
    return out;
}

std::vector<ExactRatio> g_table(unsigned m, std::size_t n_max) {
    std::map<std::size_t, std::vector<ExactRatio>> columns;
    auto column = [&](std::size_t c) -> const std::vector<ExactRatio>& {
        auto it = columns.find(c);
        if (it == columns.end())
            it = columns.emplace(c, perm_rough_impl(static_cast<unsigned>(c), n_max - (c - m))).first;
        return it->second;
    };

    std::vector<mpq_class> g(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        mpq_class v = 1;
        for (std::size_t k = 0; 2 * k + m < n; ++k) v -= g[k] * column(k + m)[n - k].value();
        v.canonicalize();
        g[n] = std::move(v);
    }
    std::vector<ExactRatio> out;
    out.reserve(n_max + 1);
    for (auto& v : g) out.emplace_back(std::move(v));
    return out;
}

}  // namespace gapdeg::exact
