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

#ifndef GAPDEG_EXACT_TYPES_HPP
#define GAPDEG_EXACT_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gapdeg {

/// Thrown when a computation would exceed a declared resource cap
/// (coefficient size, enumeration budget).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace exact {

/// Number of elements q of the base field. Counting formulas accept any
/// integer q >= 2; actual field arithmetic lives in the oracle.
class FieldSize {
public:
    explicit FieldSize(unsigned long q);
    unsigned long value() const noexcept { return q_; }
    friend bool operator==(FieldSize, FieldSize) = default;

private:
    unsigned long q_;
};

/// Exact proportion in [0, 1], always kept in lowest terms.
class ExactRatio {
public:
    ExactRatio() = default;
    explicit ExactRatio(mpq_class value);
    ExactRatio(const mpz_class& numerator, const mpz_class& denominator);

    const mpq_class& value() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    double to_double() const { return value_.get_d(); }

    /// "num/den"; integers render without a denominator ("0", "1").
    std::string str() const { return value_.get_str(); }
    /// Always "num/den", the serialization used for tables.
    std::string fraction_str() const;

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
    friend bool operator<(const ExactRatio& a, const ExactRatio& b) { return a.value_ < b.value_; }
    friend bool operator<=(const ExactRatio& a, const ExactRatio& b) { return a.value_ <= b.value_; }

private:
    mpq_class value_{0};
};

/// Integer power series truncated after degree `bound()`.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t bound);
    static TruncatedSeries one(std::size_t bound);

    std::size_t bound() const noexcept { return coeffs_.size() - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    mpz_class& operator[](std::size_t i) { return coeffs_[i]; }
    const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Truncated product; zero coefficients of either factor are skipped, so
    /// sparse factors such as (1 - z^k)^e multiply in O((bound/k)^2).
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);

    /// Largest coefficient size in bits.
    std::size_t max_bits() const;

private:
    std::vector<mpz_class> coeffs_;
};

TruncatedSeries operator*(TruncatedSeries lhs, const TruncatedSeries& rhs);

/// Counts R(n, m) of monic degree-n polynomials over F_q with no nonconstant
/// divisor of degree <= m, for n = 0..n_max.
struct RoughTable {
    FieldSize q;
    unsigned m = 0;
    std::vector<mpz_class> counts;

    std::size_t n_max() const noexcept { return counts.size() - 1; }
};

}  // namespace exact
}  // namespace gapdeg

#endif
