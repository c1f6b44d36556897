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

#ifndef GAPDEG_ORACLE_POLY_HPP
#define GAPDEG_ORACLE_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gapdeg/oracle/field.hpp"

namespace gapdeg::oracle {

/// Default cap on the number of polynomials a single enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Monic polynomial over F_q; coefficients low to high, last one is 1.
struct FqPoly {
    std::vector<FqElem> coeffs{1};

    std::size_t degree() const noexcept { return coeffs.size() - 1; }

    /// The monic polynomial of degree n whose lower coefficients are the
    /// base-q digits of `index` (c_0 least significant). Enumerating
    /// index = 0..q^n-1 visits degree-n monics in lexicographic order of
    /// (c_{n-1}, ..., c_0).
    static FqPoly from_index(const Field& field, std::uint64_t index, unsigned n);
    std::uint64_t index(const Field& field) const;

    /// Human-readable form such as "x^2 + x + 1"; for k > 1 coefficients
    /// print as their codes in brackets.
    std::string str(const Field& field) const;

    friend bool operator==(const FqPoly&, const FqPoly&) = default;
};

struct Factor {
    FqPoly poly;
    unsigned multiplicity = 1;
};

/// Irreducible factors with multiplicities, in order of discovery (degree,
/// then index).
using Factorization = std::vector<Factor>;

FqPoly multiply(const Field& field, const FqPoly& a, const FqPoly& b);

/// Quotient when the monic b divides a, nothing otherwise.
std::optional<FqPoly> divide_exact(const Field& field, const FqPoly& a, const FqPoly& b);

/// All monic irreducibles of degree 1..max_deg, by degree then index. Each
/// degree is sieved: products of smaller irreducibles with arbitrary monic
/// cofactors are struck out of the full enumeration. Throws
/// ResourceLimitError if q^max_deg exceeds `budget`.
std::vector<FqPoly> gen_irreducibles(const Field& field, unsigned max_deg,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Trial division by the irreducibles of degree <= deg F / 2; a nonconstant
/// remainder is irreducible. Requires deg F >= 1.
Factorization factor(const Field& field, const FqPoly& f);
/// Same, reusing an irreducible list that covers degree deg F / 2.
Factorization factor(const Field& field, const FqPoly& f, const std::vector<FqPoly>& irreducibles);

/// Product of the prime powers.
FqPoly expand(const Field& field, const Factorization& fact);

}  // namespace gapdeg::oracle

#endif
