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

#ifndef GAPDEG_ASYMPTOTIC_GRID_FUNCTION_HPP
#define GAPDEG_ASYMPTOTIC_GRID_FUNCTION_HPP

#include <cstddef>
#include <ostream>
#include <vector>

namespace gapdeg::asymptotic {

/// How a GridFunction is continued past its last grid point.
enum class TailKind {
    constant,    ///< value = tail_value; error 1/Gamma(u+1) (Buchstab's function)
    reciprocal,  ///< value = tail_value / (u + 1); relative error decays like u^-2
};

/// A function sampled on the uniform grid origin + i*step, i = 0..size()-1.
///
/// Evaluation uses cubic Lagrange interpolation whose stencil never straddles
/// an integer: both functions stored here are only piecewise smooth, with
/// derivative jumps at integers. Below the origin the function equals
/// `below_value`; past `tail_start` the tail model takes over.
struct GridFunction {
    double origin = 0.0;
    double step = 0.0;
    std::vector<double> values;
    std::vector<double> error_bounds;  ///< per-point absolute error estimate
    int interpolation_order = 4;
    double below_value = 0.0;

    double tail_start = 0.0;
    double tail_value = 0.0;
    /// For TailKind::reciprocal: relative deviation observed at tail_start.
    double tail_error_bound = 0.0;
    TailKind tail_kind = TailKind::constant;

    std::size_t size() const noexcept { return values.size(); }
    double grid_point(std::size_t i) const noexcept { return origin + static_cast<double>(i) * step; }
    double end() const noexcept { return grid_point(values.size() - 1); }

    double operator()(double u) const;
    /// Absolute error bound at u (grid estimate, interpolated; tail model past tail_start).
    double error_bound(double u) const;
    double tail(double u) const;
    double tail_bound(double u) const;

    /// CSV with header "u,value,error_bound", one row per grid point.
    void write_csv(std::ostream& os) const;
};

}  // namespace gapdeg::asymptotic

#endif
