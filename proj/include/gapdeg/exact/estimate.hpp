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

#ifndef GAPDEG_EXACT_ESTIMATE_HPP
#define GAPDEG_EXACT_ESTIMATE_HPP

// Finite-n estimates of the factors eta_q(m) and c_q(m) = C eta_q(m). No
// reference values exist for either; everything here is an estimate and is
// labeled as one.

#include <optional>
#include <string>

#include "gapdeg/asymptotic/grid_function.hpp"
#include "gapdeg/bigfloat.hpp"
#include "gapdeg/exact/types.hpp"

namespace gapdeg::exact {

/// Estimates whose drift between n/2 and n exceeds this are flagged.
inline constexpr double kStabilityThreshold = 1e-2;

struct EtaEstimate {
    HighPrecisionReal value;
    double at_half = 0.0;    ///< the same estimator at n/2
    double stability = 0.0;  ///< |value - at_half|
    bool converged = false;  ///< stability <= kStabilityThreshold
    std::optional<FieldSize> q;  ///< empty for the permutation analogue
    unsigned m = 1;
    unsigned long n = 0;
    bool numeric = false;  ///< numeric tables were used (n beyond the exact threshold)
    std::string label = "estimate";
};

/// eta_hat = f(n, m) / d(n/m).
EtaEstimate eta_estimate(FieldSize q, unsigned m, unsigned long n, const asymptotic::GridFunction& d);

/// c_hat = C eta_hat with m = 1.
EtaEstimate cq_estimate(FieldSize q, unsigned long n, const asymptotic::GridFunction& d);

/// g(n, m) / d(n/m); should tend to 1.
EtaEstimate eta_perm_estimate(unsigned m, unsigned long n, const asymptotic::GridFunction& d);

}  // namespace gapdeg::exact

#endif
