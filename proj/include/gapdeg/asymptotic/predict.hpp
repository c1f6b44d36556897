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

#ifndef GAPDEG_ASYMPTOTIC_PREDICT_HPP
#define GAPDEG_ASYMPTOTIC_PREDICT_HPP

#include <optional>
#include <string>

#include "gapdeg/asymptotic/grid_function.hpp"
#include "gapdeg/exact/types.hpp"

namespace gapdeg::asymptotic {

/// Closed-form leading terms, u = n/m throughout.
enum class PredictorKind {
    r_buchstab,   ///< lambda_q(m) e^gamma w(u)
    p_buchstab,   ///< e^{gamma - H_m} w(u)
    p_simple,     ///< w(u) / m
    f_density,    ///< d(u), with the q-dependent factor set to 1
    g_density,    ///< d(u)
    g_reciprocal, ///< C m / (n + m)
    d_asymptote,  ///< C / (u + 1)
};

/// Throws std::invalid_argument on an unknown name.
PredictorKind parse_predictor_kind(const std::string& name);
std::string to_string(PredictorKind kind);

/// Evaluates predictors against fixed w and d grids. Immutable after
/// construction.
class Predictor {
public:
    Predictor(GridFunction omega, GridFunction d);

    /// Solves both grids with default parameters (a few seconds).
    static Predictor standard();

    /// r and p kinds require n > m >= 1 and (for r_buchstab) a field size; the
    /// others require m >= 1.
    double operator()(PredictorKind kind, std::optional<exact::FieldSize> q, unsigned long n, unsigned m) const;

    const GridFunction& omega() const noexcept { return omega_; }
    const GridFunction& d() const noexcept { return d_; }
    double C() const noexcept { return c_; }
    double euler_gamma() const noexcept { return gamma_; }

private:
    GridFunction omega_;
    GridFunction d_;
    double gamma_;
    double c_;
};

}  // namespace gapdeg::asymptotic

#endif
