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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gapdeg/exact/counting.hpp"
#include "gapdeg/exact/estimate.hpp"
#include "gapdeg/exact/numeric.hpp"
#include "gapdeg/exact/real.hpp"
#include "brute_force.hpp"

using namespace gapdeg;
using namespace gapdeg::exact;
using namespace brute;

namespace {

mpz_class ipow(unsigned long q, unsigned n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, n);
    return r;
}

}  // namespace

TEST_CASE("irreducible counts") {
    CHECK(irr_count(FieldSize(2), 1) == 2);
    CHECK(irr_count(FieldSize(2), 2) == 1);
    CHECK(irr_count(FieldSize(2), 4) == 3);
    CHECK_THROWS_AS(irr_count(FieldSize(2), 0), std::invalid_argument);
    for (unsigned p : {2u, 3u})
        for (unsigned n = 1; n <= (p == 2 ? 8u : 5u); ++n) CHECK(irr_count(FieldSize(p), n) == brute_poly(p, n).irreducible);
}

TEST_CASE("rough tables") {
    const auto t = rough_table_rec(FieldSize(2), 1, 4);
    CHECK(t.counts[2] == 1);
    CHECK(rough_table_rec(FieldSize(2), 3, 2).counts[2] == 0);
    CHECK(rough_table_gf(FieldSize(3), 0, 5).counts[5] == 243);
    CHECK(rough_table_rec(FieldSize(2), 0, 4).counts[4] == 16);
    CHECK(rough_table_gf(FieldSize(5), 2, 7).counts == rough_table_rec(FieldSize(5), 2, 7).counts);

    CHECK(r_ratio(FieldSize(2), 2, 1).str() == "1/4");
    CHECK(r_ratio(FieldSize(2), 5, 5).str() == "0");
    CHECK(r_ratio(FieldSize(2), 0, 9).str() == "1");

    CHECK(perm_rough(3, 1).str() == "1/3");
    CHECK(perm_rough(0, 7).str() == "1");
    CHECK(perm_rough(2, 1).str() == "1/2");
}

TEST_CASE("gap tables on small cases") {
    CHECK(f_table(FieldSize(2), 1, 2)[2].str() == "3/4");
    CHECK(f_table(FieldSize(3), 1, 2)[2].str() == "2/3");
    CHECK(f_table(FieldSize(2), 3, 3)[3].str() == "1");
    CHECK(g_table(1, 2)[2].str() == "1/2");
    CHECK(g_table(1, 3)[3].str() == "2/3");
    CHECK(g_table(2, 2)[2].str() == "1");
    CHECK(g_table(5, 0)[0].str() == "1");
    CHECK(f_table(FieldSize(2), 0, 3)[0].str() == "1");
    CHECK(f_table(FieldSize(2), 0, 3)[3].str() == "0");
}

TEST_CASE("polynomial tables match divisor enumeration") {
    struct Range {
        unsigned p, n_max;
    };
    for (const auto [p, n_max] : {Range{2, 9}, Range{3, 5}, Range{5, 4}}) {
        const FieldSize q(p);
        for (unsigned n = 0; n <= n_max; ++n) {
            const Brute b = brute_poly(p, n);
            for (unsigned m = 0; m <= n_max; ++m) {
                const unsigned mm = std::min(m, n);
                CAPTURE(p);
                CAPTURE(n);
                CAPTURE(m);
                CHECK(f_counts(q, m, n_max)[n] == b.f_count[mm]);
                const mpz_class want_r = m <= n ? mpz_class(b.r_count[m]) : mpz_class(n == 0 ? 1 : 0);
                CHECK(rough_table_rec(q, m, n_max).counts[n] == want_r);
                CHECK(rough_table_gf(q, m, n_max).counts[n] == want_r);
                mpq_class want_f(f_counts(q, m, n_max)[n], ipow(p, n));
                want_f.canonicalize();
                CHECK(f_table(q, m, n_max)[n].value() == want_f);
            }
        }
    }
}

TEST_CASE("permutation tables match enumeration of S_n") {
    for (unsigned n = 0; n <= 8; ++n) {
        std::vector<mpq_class> g, pr;
        brute_perm(n, g, pr);
        for (unsigned m = 0; m <= n; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(g_table(m, 8)[n].value() == g[m]);
            CHECK(perm_rough_table(m, 8)[n].value() == pr[m]);
        }
    }
}

TEST_CASE("real-valued quantities") {
    CHECK(lambda_q(FieldSize(2), 1).to_double() == 0.25);
    CHECK(lambda_q(FieldSize(2), 2).to_double() == 0.1875);
    CHECK(lambda_q(FieldSize(7), 0).to_double() == 1.0);
    CHECK(harmonic(1).to_double() == 1.0);
    CHECK(harmonic(2).to_double() == 1.5);
    CHECK(std::abs(harmonic(10).to_double() - (std::log(10.0) + 0.5772156649015329)) < 0.05);
    CHECK(euler_gamma(128).str(30).rfind("0.57721566490153286060651209008", 0) == 0);

    // lambda_q(m) directly as a double product with brute-force I_k.
    double lam = 1.0;
    for (unsigned k = 1; k <= 6; ++k) lam *= std::pow(1.0 - std::pow(2.0, -double(k)), double(brute_poly(2, k).irreducible));
    CHECK(lambda_q(FieldSize(2), 6).to_double() == doctest::Approx(lam).epsilon(1e-14));
}

TEST_CASE("exact ratio rendering") {
    const ExactRatio half(mpz_class(2), mpz_class(4));
    CHECK(half.str() == "1/2");
    CHECK(ExactRatio(mpq_class(1)).str() == "1");
    CHECK(ExactRatio(mpq_class(1)).fraction_str() == "1/1");
    CHECK_THROWS_AS(FieldSize(1), std::invalid_argument);
}

TEST_CASE("floating-point tables agree with exact ones") {
    const double g_ex = g_table(1, 50)[50].to_double();
    CHECK(std::abs(numeric_g_table(1, 50).values[50] / g_ex - 1.0) < 1e-10);
    const double r_ex = r_ratio(FieldSize(2), 40, 3).to_double();
    CHECK(std::abs(numeric_table(TableKind::r, FieldSize(2), 3, 40).values[40] / r_ex - 1.0) < 1e-10);
    for (auto kind : {TableKind::r, TableKind::f}) CHECK(validate_overlap(kind, FieldSize(3), 2).ok);
    CHECK(validate_overlap(TableKind::p, std::nullopt, 2).ok);
    CHECK(validate_overlap(TableKind::g, std::nullopt, 1).ok);
    CHECK_THROWS_AS(numeric_table(TableKind::f, std::nullopt, 1, 10), std::invalid_argument);

    CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 10; ++i) s.add(1e-16);
    CHECK(std::abs(s.value() - (1.0 + 1e-15)) < 2e-16);
}
