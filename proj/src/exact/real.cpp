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

#include "gapdeg/exact/real.hpp"

#include <stdexcept>

#include "gapdeg/exact/counting.hpp"

namespace gapdeg::exact {

namespace {

void check_precision(unsigned bits) {
    if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
}

BigFloat from_mpz(const mpz_class& z) {
    BigFloat x;
    mpfr_set_z(x.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return x;
}

}  // namespace

HighPrecisionReal lambda_q(FieldSize q, unsigned m, unsigned precision_bits) {
    check_precision(precision_bits);
    PrecisionGuard guard(precision_bits + 32);
    BigFloat log_sum = 0;
    BigFloat small_product = 1;
    const auto irr = irr_counts(q, m);
    for (unsigned k = 1; k <= m; ++k) {
        BigFloat qk = boost::multiprecision::pow(BigFloat(q.value()), k);
        // Small exponents go through exact powering so that e.g. lambda_2(2) = 3/16 is exact.
        if (irr[k] <= (1u << 20)) {
            BigFloat factor = 1 - 1 / qk;
            small_product *= boost::multiprecision::pow(factor, static_cast<unsigned>(irr[k].get_ui()));
        } else {
            log_sum += from_mpz(irr[k]) * boost::multiprecision::log1p(-1 / qk);
        }
    }
    HighPrecisionReal out;
    out.value = small_product * boost::multiprecision::exp(log_sum);
    out.precision_bits = precision_bits;
    return out;
}

HighPrecisionReal harmonic(unsigned m, unsigned precision_bits) {
    check_precision(precision_bits);
    PrecisionGuard guard(precision_bits);
    // Exact rational sum for moderate m keeps H_m correctly rounded.
    HighPrecisionReal out;
    out.precision_bits = precision_bits;
    if (m <= 2000) {
        mpq_class h = 0;
        for (unsigned k = 1; k <= m; ++k) h += mpq_class(1, k);
        h.canonicalize();
        BigFloat num = from_mpz(h.get_num());
        BigFloat den = from_mpz(h.get_den());
        out.value = num / den;
    } else {
        BigFloat h = 0;
        for (unsigned k = m; k >= 1; --k) h += BigFloat(1) / k;
        out.value = h;
    }
    return out;
}

HighPrecisionReal euler_gamma(unsigned precision_bits) {
    check_precision(precision_bits);
    PrecisionGuard guard(precision_bits);
    HighPrecisionReal out;
    out.precision_bits = precision_bits;
    mpfr_const_euler(out.value.backend().data(), MPFR_RNDN);
    return out;
}

}  // namespace gapdeg::exact
