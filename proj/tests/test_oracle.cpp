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
#include <functional>
#include <set>

#include "brute_force.hpp"
#include "gapdeg/exact/types.hpp"
#include "gapdeg/oracle/census.hpp"
#include "gapdeg/oracle/degree_set.hpp"
#include "gapdeg/oracle/field.hpp"
#include "gapdeg/oracle/poly.hpp"

using namespace gapdeg;
using namespace gapdeg::oracle;

namespace {

FqPoly poly(std::vector<FqElem> c) { return FqPoly{std::move(c)}; }

unsigned long upow(unsigned long b, unsigned e) {
    unsigned long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Number of monic irreducibles of degree n by direct Moebius inversion.
long moebius_count(long q, long n) {
    long total = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long mu = 1, x = d;
        for (long p = 2; p * p <= x; ++p)
            if (x % p == 0) {
                x /= p;
                if (x % p == 0) mu = 0;
                mu = -mu;
            }
        if (x > 1) mu = -mu;
        long t = 1;
        for (long i = 0; i < n / d; ++i) t *= q;
        total += mu * t;
    }
    return total / n;
}

// All partitions of n, largest part first.
void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (n == 0) {
        fn(cur);
        return;
    }
    for (unsigned k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions(n - k, k, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("field construction") {
    const auto f2 = Field::build(2);
    CHECK(f2.add(1, 1) == 0);
    const auto f3 = Field::build(3);
    CHECK(f3.mul(2, 2) == 1);
    const auto f4 = Field::build(2, 2);
    for (FqElem a = 1; a < 4; ++a) CHECK(f4.mul(a, f4.mul(a, a)) == 1);
    CHECK(Field::of_order(9).characteristic() == 3);
    CHECK(Field::of_order(9).degree() == 2);
    CHECK_THROWS_AS(Field::build(4), std::invalid_argument);
    CHECK_THROWS_AS(Field::build(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::build(2, 11), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(f3.inv(0), std::domain_error);
}

TEST_CASE("field axioms") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
        CAPTURE(q);
        const auto F = Field::of_order(q);
        bool ok = true;
        for (FqElem a = 0; a < q; ++a) {
            ok = ok && F.add(a, 0) == a && F.mul(a, 1) == a && F.add(a, F.neg(a)) == 0;
            if (a != 0) {
                ok = ok && F.mul(a, F.inv(a)) == 1;
                FqElem x = 1;
                for (unsigned i = 0; i + 1 < q; ++i) x = F.mul(x, a);
                ok = ok && x == 1;
            }
            for (FqElem b = 0; b < q; ++b) {
                ok = ok && F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a);
                ok = ok && (a == 0 || b == 0 || F.mul(a, b) != 0);
                for (FqElem c = 0; c < q; ++c) {
                    ok = ok && F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
                    ok = ok && F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c));
                    ok = ok && F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("polynomial arithmetic") {
    const auto F = Field::of_order(4);
    for (std::uint64_t i = 0; i < 64; ++i) CHECK(FqPoly::from_index(F, i, 3).index(F) == i);
    const auto a = FqPoly::from_index(F, 37, 3), b = FqPoly::from_index(F, 11, 2);
    const auto ab = multiply(F, a, b);
    CHECK(ab.degree() == 5);
    REQUIRE(divide_exact(F, ab, b));
    CHECK(*divide_exact(F, ab, b) == a);
    CHECK_FALSE(divide_exact(F, poly({1, 0, 1}), poly({0, 1})));  // x^2+1 has no root 0
}

TEST_CASE("irreducible generation") {
    const auto F2 = Field::build(2);
    const auto irr2 = gen_irreducibles(F2, 2);
    const std::set<std::vector<FqElem>> got{irr2[0].coeffs, irr2[1].coeffs, irr2[2].coeffs};
    CHECK(irr2.size() == 3);
    CHECK(got == std::set<std::vector<FqElem>>{{0, 1}, {1, 1}, {1, 1, 1}});
    const auto irr3 = gen_irreducibles(F2, 3);
    CHECK(std::count_if(irr3.begin(), irr3.end(), [](const FqPoly& p) { return p.degree() == 3; }) == 2);
    CHECK(gen_irreducibles(Field::build(3), 1).size() == 3);
    for (unsigned q : {3u, 4u, 8u}) {
        const auto irr = gen_irreducibles(Field::of_order(q), 4);
        for (unsigned k = 1; k <= 4; ++k)
            CHECK(std::count_if(irr.begin(), irr.end(), [k](const FqPoly& p) { return p.degree() == k; }) ==
                  moebius_count(q, k));
    }
    CHECK_THROWS_AS(gen_irreducibles(F2, 30, 1000), ResourceLimitError);
}

TEST_CASE("factorization") {
    const auto F2 = Field::build(2);
    const auto sq = factor(F2, poly({1, 0, 1}));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].poly == poly({1, 1}));
    CHECK(sq[0].multiplicity == 2);
    const auto irr = factor(F2, poly({1, 1, 1}));
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].poly == poly({1, 1, 1}));
    CHECK(irr[0].multiplicity == 1);
    const auto three = factor(F2, poly({0, 1, 0, 1}));
    REQUIRE(three.size() == 2);
    unsigned mult_x = 0, mult_x1 = 0;
    for (const auto& f : three) {
        if (f.poly == poly({0, 1})) mult_x = f.multiplicity;
        if (f.poly == poly({1, 1})) mult_x1 = f.multiplicity;
    }
    CHECK(mult_x == 1);
    CHECK(mult_x1 == 2);
    for (unsigned q : {4u, 9u}) {
        const auto F = Field::of_order(q);
        for (std::uint64_t i = 0; i < upow(q, 4); i += 7) {
            const auto f = FqPoly::from_index(F, i, 4);
            CHECK(expand(F, factor(F, f)) == f);
        }
    }
}

TEST_CASE("degree sets") {
    const auto F2 = Field::build(2);
    CHECK(divisor_degree_set(factor(F2, poly({1, 1, 1}))).elements() == std::vector<unsigned>{0, 2});
    CHECK(divisor_degree_set(factor(F2, poly({0, 1, 0, 1}))).elements() == std::vector<unsigned>{0, 1, 2, 3});
    // x^5 + x^2 + 1 is irreducible over F_2.
    const auto quintic_times_linear = multiply(F2, poly({1, 0, 1, 0, 0, 1}), poly({0, 1}));
    const auto s = divisor_degree_set(factor(F2, quintic_times_linear));
    CHECK(s.elements() == std::vector<unsigned>{0, 1, 5, 6});
    CHECK(max_gap(DegreeSet::subset_sums({1, 1, 1})) == 1);
    CHECK(max_gap(DegreeSet::subset_sums({2})) == 2);
    CHECK(max_gap(s) == 4);
    DegreeSet no_zero(4);
    no_zero.set(2);
    CHECK_THROWS(max_gap(no_zero));

    DegreeSet wide(130);
    wide.set(0);
    wide.or_shifted(70);
    CHECK(wide.elements() == std::vector<unsigned>{0, 70});

    for (unsigned n = 1; n <= 14; ++n) {
        std::vector<unsigned> cur;
        partitions(n, n, cur, [&](const std::vector<unsigned>& parts) {
            const unsigned gap = max_gap(DegreeSet::subset_sums(parts));
            for (unsigned m = 0; m <= n; ++m) CHECK(prefix_criterion(parts, m) == (gap <= m));
        });
    }
}

TEST_CASE("polynomial census") {
    const auto F2 = Field::build(2), F3 = Field::build(3);
    const auto c22 = census_poly(F2, 2);
    CHECK(c22.f_count[1] == 3);
    CHECK(c22.r_count[1] == 1);
    CHECK(census_poly(F3, 2).f_count[1] == 6);
    const auto c21 = census_poly(F2, 1);
    CHECK(c21.f_count[1] == 2);
    CHECK(c21.r_count[1] == 0);

    struct Range {
        unsigned p, n_max;
    };
    for (const auto [p, n_max] : {Range{2, 9}, Range{3, 5}, Range{5, 4}}) {
        const auto all = census_poly_upto(Field::build(p), n_max, {kDefaultEnumerationBudget, 1000});
        for (unsigned n = 0; n <= n_max; ++n) {
            const auto b = brute::brute_poly(p, n);
            CAPTURE(p);
            CAPTURE(n);
            CHECK(all[n].polynomials == upow(p, n));
            for (unsigned m = 0; m <= n; ++m) {
                CHECK(all[n].f_count[m] == b.f_count[m]);
                CHECK(all[n].r_count[m] == b.r_count[m]);
            }
        }
    }
    CHECK(census_poly_upto(F3, 6, {kDefaultEnumerationBudget, 1000})[6].factor_checked == 729);
    CHECK_THROWS_AS(census_poly(F2, 30, {1000}), ResourceLimitError);
}

TEST_CASE("census over F_4 against divisor search") {
    const auto F = Field::of_order(4);
    for (unsigned n = 1; n <= 4; ++n) {
        const auto c = census_poly(F, n);
        std::vector<unsigned long> f(n + 1, 0), r(n + 1, 0);
        for (std::uint64_t i = 0; i < upow(4, n); ++i) {
            const auto poly_f = FqPoly::from_index(F, i, n);
            std::vector<unsigned> degs{0};
            for (unsigned k = 1; k < n; ++k)
                for (std::uint64_t j = 0; j < upow(4, k); ++j)
                    if (divide_exact(F, poly_f, FqPoly::from_index(F, j, k))) {
                        degs.push_back(k);
                        break;
                    }
            degs.push_back(n);
            unsigned gap = 0;
            for (std::size_t k = 1; k < degs.size(); ++k) gap = std::max(gap, degs[k] - degs[k - 1]);
            for (unsigned m = 0; m <= n; ++m) {
                f[m] += gap <= m;
                r[m] += degs[1] > m;
            }
        }
        for (unsigned m = 0; m <= n; ++m) {
            CHECK(c.f_count[m] == f[m]);
            CHECK(c.r_count[m] == r[m]);
        }
    }
}

TEST_CASE("permutation census") {
    const auto c3 = census_perm(3);
    CHECK(c3.g[1].str() == "2/3");
    CHECK(c3.p[1].str() == "1/3");
    CHECK(census_perm(2).g[1].str() == "1/2");
    for (unsigned m = 1; m <= 1; ++m) CHECK(census_perm(1).g[m].str() == "1");
    for (unsigned n = 0; n <= 8; ++n) {
        std::vector<mpq_class> g, p;
        brute::brute_perm(n, g, p);
        const auto c = census_perm(n);
        for (unsigned m = 0; m <= n; ++m) {
            CHECK(c.g[m].value() == g[m]);
            CHECK(c.p[m].value() == p[m]);
        }
    }
    CHECK(cycle_types(10).size() == 42);
    mpz_class total = 0;
    for (const auto& t : cycle_types(12)) total += t.weight;
    CHECK(total == 479001600);
    CHECK_THROWS_AS(census_perm(61), ResourceLimitError);
}
