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

#ifndef GAPDEG_ASYMPTOTIC_BUCHSTAB_HPP
#define GAPDEG_ASYMPTOTIC_BUCHSTAB_HPP

#include <stdexcept>

#include "gapdeg/asymptotic/grid_function.hpp"

namespace gapdeg::asymptotic {

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultStep = 1.0 / 1024.0;
inline constexpr double kBuchstabTailStart = 12.0;

/// Buchstab's function on [1, u_max] from u w(u) = 1 + int_1^{u-1} w(t) dt,
/// with w(u) = 1/u on [1, 2] and w(u) = 0 below 1.
///
/// The running integral is advanced panel by panel with a four-point
/// Lagrange rule (centered inside each unit segment, one-sided next to the
/// integer knots where w loses smoothness), so the scheme is fourth order and
/// fully explicit. Past u_max the function is continued by e^{-gamma}, with
/// error bound 1/Gamma(u+1).
///
/// Requires u_max >= 2 and h = 1/M with integer M >= 256. Throws SolverError
/// if the grid fails the closed-form check on [1, 3] at 10 h^4.
GridFunction solve_buchstab(double u_max = kBuchstabTailStart, double h = kDefaultStep);

/// Closed forms on [1, 3]: 1/u on [1, 2], (1 + log(u-1))/u on [2, 3]; 0 below 1.
double buchstab_closed_form(double u);

}  // namespace gapdeg::asymptotic

#endif
