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

#include "gapdeg/exact/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gapdeg/bigfloat.hpp"

namespace gapdeg {

unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits10_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10_for_bits(bits));
}

PrecisionGuard::~PrecisionGuard() { BigFloat::default_precision(saved_digits10_); }

std::string HighPrecisionReal::fixed(int decimals) const {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(decimals);
    os << value;
    return os.str();
}

std::string HighPrecisionReal::str(int digits) const {
    std::ostringstream os;
    os.precision(digits);
    os << value;
    return os.str();
}

namespace exact {

FieldSize::FieldSize(unsigned long q) : q_(q) {
    if (q < 2) throw std::invalid_argument("field size q must be >= 2");
}

ExactRatio::ExactRatio(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
    if (sgn(value_) < 0 || value_ > 1)
        throw std::domain_error("proportion outside [0, 1]: " + value_.get_str());
}

ExactRatio::ExactRatio(const mpz_class& numerator, const mpz_class& denominator)
    : ExactRatio(mpq_class(numerator, denominator)) {
    if (sgn(denominator) <= 0) throw std::invalid_argument("denominator must be positive");
}

std::string ExactRatio::fraction_str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

TruncatedSeries::TruncatedSeries(std::size_t bound) : coeffs_(bound + 1) {}

TruncatedSeries TruncatedSeries::one(std::size_t bound) {
    TruncatedSeries s(bound);
    s[0] = 1;
    return s;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
    const std::size_t n = bound();
    std::vector<mpz_class> out(n + 1);
    std::vector<std::size_t> rhs_support;
    for (std::size_t j = 0; j <= std::min(n, rhs.bound()); ++j)
        if (sgn(rhs[j]) != 0) rhs_support.push_back(j);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j : rhs_support) {
            if (i + j > n) break;
            mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs[j].get_mpz_t());
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

std::size_t TruncatedSeries::max_bits() const {
    std::size_t bits = 0;
    for (const auto& c : coeffs_) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

TruncatedSeries operator*(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs *= rhs;
    return lhs;
}

}  // namespace exact
}  // namespace gapdeg
