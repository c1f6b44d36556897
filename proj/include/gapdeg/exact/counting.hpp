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

#ifndef GAPDEG_EXACT_COUNTING_HPP
#define GAPDEG_EXACT_COUNTING_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "gapdeg/exact/types.hpp"

namespace gapdeg::exact {

/// Coefficients of the rough generating function are refused beyond this
/// many bits.
inline constexpr std::size_t kCoefficientBitCap = std::size_t{1} << 22;

/// Möbius function of n >= 1.
int moebius(unsigned long n);

/// Number I_n of monic irreducible polynomials of degree n over F_q
/// (Gauss's formula). Throws std::invalid_argument for n <= 0.
mpz_class irr_count(FieldSize q, long n);

/// I_1..I_{n_max}; index 0 holds 0.
std::vector<mpz_class> irr_counts(FieldSize q, std::size_t n_max);

/// R(n, m) for n = 0..n_max as coefficients of
///   (1 - q z)^{-1} * prod_{1 <= k <= m} (1 - z^k)^{I_k},
/// each factor expanded by repeated squaring of a truncated series.
RoughTable rough_table_gf(FieldSize q, unsigned m, std::size_t n_max);

/// R(n, m) from the logarithmic-derivative recurrence
///   n R(n,m) = sum_{k>m} k I_k sum_{j>=1} R(n - kj, m),   R(0,m) = 1.
RoughTable rough_table_rec(FieldSize q, unsigned m, std::size_t n_max);

/// r(n, m) = R(n, m) / q^n, with r(0, m) = 1.
ExactRatio r_ratio(FieldSize q, unsigned n, unsigned m);

/// p(k, m) for k = 0..n_max, from n p(n,m) = 1 + sum_{m<k<n-m} p(k,m).
std::vector<ExactRatio> perm_rough_table(unsigned m, std::size_t n_max);

/// Proportion of permutations of n objects with no cycle of length <= m.
ExactRatio perm_rough(unsigned n, unsigned m);

/// Counts q^n f(n, m) for n = 0..n_max (monic degree-n polynomials whose
/// divisor-degree set has no gap larger than m).
std::vector<mpz_class> f_counts(FieldSize q, unsigned m, std::size_t n_max);

/// f(n, m) for n = 0..n_max, solved from
///   1 = sum_{0<=k<=n} f(k,m) r(n-k, k+m).
/// m = 0 is accepted: f(0,0) = 1 and f(k,0) = 0 for k >= 1.
std::vector<ExactRatio> f_table(FieldSize q, unsigned m, std::size_t n_max);

/// g(n, m) for n = 0..n_max, solved from
///   1 = sum_{0<=k<=n} g(k,m) p(n-k, k+m).
std::vector<ExactRatio> g_table(unsigned m, std::size_t n_max);

}  // namespace gapdeg::exact

#endif
