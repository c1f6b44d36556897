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

#ifndef GAPDEG_ORACLE_FIELD_HPP
#define GAPDEG_ORACLE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace gapdeg::oracle {

/// Element of F_{p^k} encoded as sum_i c_i p^i, where c_0 + c_1 t + ... is
/// its representative modulo the defining polynomial. 0 and 1 encode
/// themselves.
using FqElem = std::uint32_t;

/// Largest field order for which full operation tables are built.
inline constexpr unsigned kMaxFieldOrder = 1024;

/// A finite field F_q, q = p^k, with precomputed addition and multiplication
/// tables. Immutable and shareable.
class Field {
public:
    /// For k = 1 the residues mod p; otherwise F_p[t] modulo the monic
    /// irreducible of degree k with the smallest code. Throws
    /// std::invalid_argument if p is not prime, k = 0, or p^k exceeds
    /// kMaxFieldOrder.
    static Field build(unsigned p, unsigned k = 1);
    /// The field with q elements; throws std::invalid_argument unless q is a
    /// prime power within kMaxFieldOrder.
    static Field of_order(unsigned q);

    unsigned order() const noexcept { return q_; }
    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    /// Coefficients (low to high, k+1 entries) of the defining polynomial over F_p.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    FqElem add(FqElem a, FqElem b) const { return add_[a * q_ + b]; }
    FqElem mul(FqElem a, FqElem b) const { return mul_[a * q_ + b]; }
    FqElem neg(FqElem a) const { return neg_[a]; }
    FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
    /// Throws std::domain_error for a = 0.
    FqElem inv(FqElem a) const;

private:
    Field() = default;

    unsigned p_ = 0, k_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<FqElem> add_, mul_, neg_, inv_;
};

bool is_prime(unsigned n);

}  // namespace gapdeg::oracle

#endif
