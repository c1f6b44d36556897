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

#include "gapdeg/oracle/poly.hpp"

#include <stdexcept>

#include "gapdeg/exact/types.hpp"

namespace gapdeg::oracle {

namespace {

std::uint64_t checked_power(unsigned q, unsigned n, std::uint64_t budget) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < n; ++i) {
        v *= q;
        if (v > budget)
            throw ResourceLimitError("q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                                     " exceeds the enumeration budget of " + std::to_string(budget));
    }
    return v;
}

}  // namespace

FqPoly FqPoly::from_index(const Field& field, std::uint64_t index, unsigned n) {
    FqPoly f;
    f.coeffs.assign(n + 1, 0);
    for (unsigned i = 0; i < n; ++i, index /= field.order()) f.coeffs[i] = static_cast<FqElem>(index % field.order());
    f.coeffs[n] = 1;
    return f;
}

std::uint64_t FqPoly::index(const Field& field) const {
    std::uint64_t idx = 0;
    for (std::size_t i = degree(); i-- > 0;) idx = idx * field.order() + coeffs[i];
    return idx;
}

std::string FqPoly::str(const Field& field) const {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const FqElem c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        std::string coef;
        if (c != 1 || i == 0) coef = field.degree() > 1 ? "[" + std::to_string(c) + "]" : std::to_string(c);
        if (i == 0)
            out += coef;
        else
            out += coef + (i == 1 ? "x" : "x^" + std::to_string(i));
    }
    return out.empty() ? "0" : out;
}

FqPoly multiply(const Field& field, const FqPoly& a, const FqPoly& b) {
    FqPoly r;
    r.coeffs.assign(a.degree() + b.degree() + 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = field.add(r.coeffs[i + j], field.mul(a.coeffs[i], b.coeffs[j]));
    }
    return r;
}

std::optional<FqPoly> divide_exact(const Field& field, const FqPoly& a, const FqPoly& b) {
    if (b.degree() > a.degree()) return std::nullopt;
    std::vector<FqElem> rem = a.coeffs;
    const std::size_t db = b.degree();
    FqPoly quot;
    quot.coeffs.assign(a.degree() - db + 1, 0);
    for (std::size_t i = a.degree() + 1; i-- > db;) {
        const FqElem c = rem[i];
        if (c == 0) continue;
        quot.coeffs[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = field.sub(rem[i - db + j], field.mul(c, b.coeffs[j]));
    }
    for (std::size_t i = 0; i < db; ++i)
        if (rem[i] != 0) return std::nullopt;
    return quot;
}

std::vector<FqPoly> gen_irreducibles(const Field& field, unsigned max_deg, std::uint64_t budget) {
    checked_power(field.order(), max_deg, budget);
    std::vector<FqPoly> out;
    for (unsigned n = 1; n <= max_deg; ++n) {
        const std::uint64_t count = checked_power(field.order(), n, budget);
        std::vector<bool> reducible(count, false);
        for (std::size_t i = 0; i < out.size() && 2 * out[i].degree() <= n; ++i) {
            const auto cof_deg = static_cast<unsigned>(n - out[i].degree());
            const std::uint64_t cofactors = checked_power(field.order(), cof_deg, budget);
            for (std::uint64_t g = 0; g < cofactors; ++g)
                reducible[multiply(field, out[i], FqPoly::from_index(field, g, cof_deg)).index(field)] = true;
        }
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (!reducible[idx]) out.push_back(FqPoly::from_index(field, idx, n));
    }
    return out;
}

Factorization factor(const Field& field, const FqPoly& f, const std::vector<FqPoly>& irreducibles) {
    if (f.degree() == 0) throw std::invalid_argument("factor: degree must be >= 1");
    if (f.coeffs.back() != 1) throw std::invalid_argument("factor: polynomial must be monic");
    Factorization out;
    FqPoly rest = f;
    std::size_t i = 0;
    for (; i < irreducibles.size() && 2 * irreducibles[i].degree() <= rest.degree(); ++i) {
        unsigned mult = 0;
        while (auto q = divide_exact(field, rest, irreducibles[i])) {
            rest = std::move(*q);
            ++mult;
        }
        if (mult > 0) out.push_back({irreducibles[i], mult});
    }
    if (rest.degree() > 0) {
        const std::size_t listed = irreducibles.empty() ? 0 : irreducibles.back().degree();
        const bool covered = i < irreducibles.size() || listed >= rest.degree() / 2;
        if (!covered) throw std::invalid_argument("factor: irreducible list does not reach deg/2");
        out.push_back({rest, 1});
    }
    return out;
}

Factorization factor(const Field& field, const FqPoly& f) {
    return factor(field, f, gen_irreducibles(field, static_cast<unsigned>(f.degree() / 2)));
}

FqPoly expand(const Field& field, const Factorization& fact) {
    FqPoly out;
    for (const auto& [poly, mult] : fact)
        for (unsigned i = 0; i < mult; ++i) out = multiply(field, out, poly);
    return out;
}

}  // namespace gapdeg::oracle
