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

#ifndef GAPDEG_ASYMPTOTIC_DFUNC_HPP
#define GAPDEG_ASYMPTOTIC_DFUNC_HPP

#include "gapdeg/asymptotic/buchstab.hpp"
#include "gapdeg/asymptotic/grid_function.hpp"

namespace gapdeg::asymptotic {

inline constexpr double kDefaultDMax = 20.0;
/// Solves whose Richardson error estimate exceeds this are rejected.
inline constexpr double kDTolerance = 1e-6;

/// The density d(u) on [0, u_max]:
///   d(u) = 1 - int_0^{(u-1)/2} d(v)/(v+1) w((u-v)/(v+1)) dv,  d(u) = 0 for u < 0.
///
/// Marches forward in u; the integrand at u only reads d on [0, (u-1)/2].
/// Each integral is split where w's argument crosses an integer (w is only
/// piecewise smooth there) and at integer v, then summed with three-point
/// Gauss-Legendre panels of width about 8h on the cubic interpolant of d.
///
/// Per-point error bounds come from a Richardson comparison with the solve at
/// step 2h. Past u_max the function continues as C/(u+1). Throws SolverError
/// when the error estimate exceeds kDTolerance.
GridFunction solve_d(double u_max, double h, const GridFunction& omega);

/// Convenience: default Buchstab grid, u_max = kDefaultDMax, h = kDefaultStep.
GridFunction solve_d_default();

}  // namespace gapdeg::asymptotic

#endif
