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

#ifndef GAPDEG_EXACT_REAL_HPP
#define GAPDEG_EXACT_REAL_HPP

#include "gapdeg/bigfloat.hpp"
#include "gapdeg/exact/types.hpp"

namespace gapdeg::exact {

/// lambda_q(m) = prod_{k=1}^m (1 - q^{-k})^{I_k}; lambda_q(0) = 1.
HighPrecisionReal lambda_q(FieldSize q, unsigned m, unsigned precision_bits = kDefaultPrecisionBits);

/// Harmonic number H_m = sum_{1<=k<=m} 1/k; H_0 = 0.
HighPrecisionReal harmonic(unsigned m, unsigned precision_bits = kDefaultPrecisionBits);

/// Euler's constant at the requested precision.
HighPrecisionReal euler_gamma(unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace gapdeg::exact

#endif
