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

#include "gapdeg/oracle/field.hpp"

#include <stdexcept>
#include <string>

namespace gapdeg::oracle {

namespace {

using Digits = std::vector<unsigned>;

Digits digits_of(unsigned code, unsigned p, unsigned len) {
    Digits d(len);
    for (unsigned i = 0; i < len; ++i, code /= p) d[i] = code % p;
    return d;
}

unsigned code_of(const Digits& d, unsigned p) {
    unsigned code = 0;
    for (unsigned i = static_cast<unsigned>(d.size()); i-- > 0;) code = code * p + d[i];
    return code;
}

// Remainder of a modulo the monic b over F_p (a is modified in place).
void reduce(Digits& a, const Digits& b, unsigned p) {
    const std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
        const unsigned c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + (p - c) * b[j]) % p;
    }
    a.resize(db);
}

// Monic polynomial of degree k over F_p with no monic factor of degree 1..k/2.
bool irreducible_mod_p(const Digits& f, unsigned p) {
    const auto k = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= k; ++d) {
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned c = 0; c < count; ++c) {
            Digits g = digits_of(c, p, d);
            g.push_back(1);
            Digits r = f;
            reduce(r, g, p);
            bool zero = true;
            for (unsigned x : r) zero = zero && x == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::build(unsigned p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("field degree must be >= 1");
    unsigned long q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw std::invalid_argument("field order exceeds the table budget of " + std::to_string(kMaxFieldOrder));
    }

    Field f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = static_cast<unsigned>(q);
    if (k == 1) {
        f.modulus_ = {0, 1};
    } else {
        for (unsigned c = 0; c < f.q_; ++c) {
            Digits m = digits_of(c, p, k);
            m.push_back(1);
            if (irreducible_mod_p(m, p)) {
                f.modulus_ = m;
                break;
            }
        }
    }

    const unsigned n = f.q_;
    f.add_.resize(std::size_t{n} * n);
    f.mul_.resize(std::size_t{n} * n);
    f.neg_.resize(n);
    f.inv_.assign(n, 0);
    for (unsigned a = 0; a < n; ++a) {
        const Digits da = digits_of(a, p, k);
        Digits dn(k);
        for (unsigned i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
        f.neg_[a] = code_of(dn, p);
        for (unsigned b = 0; b < n; ++b) {
            const Digits db = digits_of(b, p, k);
            Digits s(k);
            for (unsigned i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
            f.add_[a * n + b] = code_of(s, p);
            Digits prod(2 * k - 1, 0);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            if (k > 1) reduce(prod, f.modulus_, p);
            f.mul_[a * n + b] = code_of(prod, p);
        }
    }
    for (unsigned a = 1; a < n; ++a)
        for (unsigned b = 1; b < n; ++b)
            if (f.mul_[a * n + b] == 1) f.inv_[a] = b;
    return f;
}

Field Field::of_order(unsigned q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned k = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return build(p, k);
}

FqElem Field::inv(FqElem a) const {
    if (a == 0 || a >= q_) throw std::domain_error("no inverse for this element");
    return inv_[a];
}

}  // namespace gapdeg::oracle
