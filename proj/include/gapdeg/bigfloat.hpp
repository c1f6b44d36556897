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

#ifndef GAPDEG_BIGFLOAT_HPP
#define GAPDEG_BIGFLOAT_HPP

#include <optional>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace gapdeg {

using BigFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Decimal digits carried by a binary precision of `bits`.
unsigned digits10_for_bits(unsigned bits);

/// Sets the default MPFR working precision for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_digits10_;
};

/// A real carried at a recorded binary precision, with an optional absolute
/// error bound when the producer tracks one.
struct HighPrecisionReal {
    BigFloat value;
    unsigned precision_bits = kDefaultPrecisionBits;
    std::optional<double> error_bound;

    double to_double() const { return value.convert_to<double>(); }
    /// Fixed-point rendering with `decimals` digits after the point.
    std::string fixed(int decimals) const;
    /// Scientific rendering with `digits` significant digits.
    std::string str(int digits) const;
};

}  // namespace gapdeg

#endif
