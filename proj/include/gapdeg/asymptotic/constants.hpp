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

#ifndef GAPDEG_ASYMPTOTIC_CONSTANTS_HPP
#define GAPDEG_ASYMPTOTIC_CONSTANTS_HPP

#include "gapdeg/asymptotic/grid_function.hpp"
#include "gapdeg/bigfloat.hpp"

namespace gapdeg::asymptotic {

/// Target absolute accuracy for kappa.
inline constexpr double kKappaTolerance = 1e-7;

struct ConstantsBundle {
    HighPrecisionReal euler_gamma;
    HighPrecisionReal exp_neg_gamma;
    HighPrecisionReal C;      ///< 1 / (1 - e^{-gamma})
    HighPrecisionReal kappa;  ///< root of int_1^inf w(y) (y+1)^{-1-kappa} dy = 1
    HighPrecisionReal tau;    ///< 1 / (4 + 2 kappa)
};

/// C = 1/(1 - e^{-gamma}) alone; needs no Buchstab grid.
HighPrecisionReal gap_constant(unsigned precision_bits = kDefaultPrecisionBits);

/// K(kappa) = int_1^inf w(y) (y+1)^{-1-kappa} dy - 1.
///
/// The grid part is integrated with Simpson's rule on each unit segment; past
/// omega.tail_start the integrand is e^{-gamma} (y+1)^{-1-kappa}, integrated in
/// closed form. If `remainder` is given it receives a bound on the total error
/// (grid error bounds plus the 1/Gamma(y+1) tail remainder).
double kappa_equation(double kappa, const GridFunction& omega, double* remainder = nullptr);

/// All constants. gamma, e^{-gamma} and C are carried at `precision_bits`;
/// kappa and tau come from the double-precision grid and carry an error
/// bound. Throws SolverError if K has no sign change on [0.1, 0.9].
ConstantsBundle constants(unsigned precision_bits, const GridFunction& omega);

/// Same, on the default Buchstab grid.
ConstantsBundle constants(unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace gapdeg::asymptotic

#endif
