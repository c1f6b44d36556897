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


// Enumeration-based reference counts shared by the unit tests. Written
// without the library so the two sides fail independently.

#ifndef GAPDEG_TESTS_BRUTE_FORCE_HPP
#define GAPDEG_TESTS_BRUTE_FORCE_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace brute {

// Brute force over F_p for prime p: dense coefficient vectors, low to high.
using Poly = std::vector<unsigned>;

inline Poly poly_of(unsigned long code, unsigned p, unsigned deg) {
    Poly f(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i, code /= p) f[i] = code % p;
    f[deg] = 1;
    return f;
}

inline bool divides(const Poly& d, Poly f, unsigned p) {
    const std::size_t dd = d.size() - 1;  // d is monic
    for (std::size_t i = f.size(); i-- > dd;) {
        const unsigned c = f[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) f[i - dd + j] = (f[i - dd + j] + (p - c) * d[j]) % p;
    }
    return std::all_of(f.begin(), f.begin() + static_cast<long>(dd), [](unsigned x) { return x == 0; });
}

struct Brute {
    std::vector<unsigned long> f_count, r_count;  // index m = 0..n
    unsigned long irreducible = 0;
};

// Divisor degrees found by trying every monic divisor.
inline Brute brute_poly(unsigned p, unsigned n) {
    Brute b;
    b.f_count.assign(n + 1, 0);
    b.r_count.assign(n + 1, 0);
    unsigned long total = 1;
    for (unsigned i = 0; i < n; ++i) total *= p;
    for (unsigned long code = 0; code < total; ++code) {
        const Poly f = poly_of(code, p, n);
        std::vector<unsigned> degs{0};
        for (unsigned k = 1; k < n; ++k) {
            unsigned long cnt = 1;
            for (unsigned i = 0; i < k; ++i) cnt *= p;
            for (unsigned long c = 0; c < cnt; ++c)
                if (divides(poly_of(c, p, k), f, p)) {
                    degs.push_back(k);
                    break;
                }
        }
        if (n > 0) degs.push_back(n);
        unsigned gap = 0;
        for (std::size_t i = 1; i < degs.size(); ++i) gap = std::max(gap, degs[i] - degs[i - 1]);
        const unsigned smallest = degs.size() > 1 ? degs[1] : 0;
        if (n > 0 && degs.size() == 2) ++b.irreducible;
        for (unsigned m = 0; m <= n; ++m) {
            if (gap <= m) ++b.f_count[m];
            if (n == 0 || smallest > m) ++b.r_count[m];
        }
    }
    return b;
}

// Cycle lengths of every permutation of n points.
inline void brute_perm(unsigned n, std::vector<mpq_class>& g, std::vector<mpq_class>& pr) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<unsigned long> gc(n + 1, 0), pc(n + 1, 0);
    unsigned long total = 0;
    do {
        ++total;
        std::vector<bool> seen(n, false);
        std::vector<unsigned> lens;
        for (unsigned s = 0; s < n; ++s) {
            if (seen[s]) continue;
            unsigned len = 0;
            for (unsigned x = s; !seen[x]; x = perm[x]) {
                seen[x] = true;
                ++len;
            }
            lens.push_back(len);
        }
        std::vector<bool> sums(n + 1, false);
        sums[0] = true;
        for (unsigned l : lens)
            for (unsigned s = n; s >= l; --s) sums[s] = sums[s] || sums[s - l];
        unsigned gap = 0, last = 0;
        for (unsigned s = 1; s <= n; ++s)
            if (sums[s]) {
                gap = std::max(gap, s - last);
                last = s;
            }
        const unsigned shortest = lens.empty() ? n + 1 : *std::min_element(lens.begin(), lens.end());
        for (unsigned m = 0; m <= n; ++m) {
            if (gap <= m) ++gc[m];
            if (shortest > m) ++pc[m];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    g.clear();
    pr.clear();
    for (unsigned m = 0; m <= n; ++m) {
        g.emplace_back(gc[m], total);
        pr.emplace_back(pc[m], total);
        g.back().canonicalize();
        pr.back().canonicalize();
    }
}

}  // namespace brute

#endif
