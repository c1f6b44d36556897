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

#include "gapdeg/asymptotic/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "gapdeg/asymptotic/buchstab.hpp"
#include "gapdeg/exact/real.hpp"

namespace gapdeg::asymptotic {

namespace {

// Simpson's rule over each unit segment of the grid, using every `stride`-th node.
double simpson_units(const GridFunction& omega, double kappa, long per_unit, long units, long stride) {
    const long panels = per_unit / stride;
    double total = 0.0;
    for (long s = 0; s < units; ++s) {
        double acc = 0.0;
        for (long j = 0; j <= panels; ++j) {
            const auto i = static_cast<std::size_t>(s * per_unit + j * stride);
            const double y = omega.grid_point(i);
            const double w = (j == 0 || j == panels) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
            acc += w * omega.values[i] * std::pow(y + 1.0, -1.0 - kappa);
        }
        total += acc * omega.step * static_cast<double>(stride) / 3.0;
    }
    return total;
}

HighPrecisionReal from_double(double x, double err, unsigned bits) {
    PrecisionGuard guard(bits);
    HighPrecisionReal out;
    out.value = x;
    out.precision_bits = bits;
    out.error_bound = err;
    return out;
}

}  // namespace

HighPrecisionReal gap_constant(unsigned precision_bits) {
    const auto gamma = exact::euler_gamma(precision_bits);
    PrecisionGuard guard(precision_bits);
    HighPrecisionReal out;
    out.precision_bits = precision_bits;
    out.value = 1 / (1 - boost::multiprecision::exp(-gamma.value));
    return out;
}

double kappa_equation(double kappa, const GridFunction& omega, double* remainder) {
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa_equation: kappa must be positive");
    const long per_unit = std::lround(1.0 / omega.step);
    const double span = omega.end() - omega.origin;
    const long units = std::lround(span);
    if (per_unit % 4 != 0 || std::abs(span - static_cast<double>(units)) > 1e-9 || omega.origin != 1.0)
        throw std::invalid_argument("kappa_equation: grid must start at 1, span whole units, and have 4 | 1/h");

    const double fine = simpson_units(omega, kappa, per_unit, units, 1);
    const double coarse = simpson_units(omega, kappa, per_unit, units, 2);

    const double y_end = omega.end();
    const double tail = omega.tail_value * std::pow(y_end + 1.0, -kappa) / kappa;

    if (remainder != nullptr) {
        double grid_err = 0.0;
        for (std::size_t i = 0; i < omega.size(); ++i)
            grid_err += omega.error_bounds.empty() ? 0.0 : omega.error_bounds[i];
        grid_err *= omega.step;  // (y+1)^{-1-kappa} <= 1/2 on the grid; keep the cruder bound
        // For y >= Y: 1/Gamma(y+1) <= exp(-a (y-Y)) / Gamma(Y+1), a = log(Y+1) - 1/(Y+1).
        const double a = std::log(y_end + 1.0) - 1.0 / (y_end + 1.0);
        const double tail_err = std::pow(y_end + 1.0, -1.0 - kappa) * std::exp(-std::lgamma(y_end + 1.0)) / a;
        *remainder = std::abs(fine - coarse) / 15.0 + grid_err + tail_err;
    }
    return fine + tail - 1.0;
}

ConstantsBundle constants(unsigned precision_bits, const GridFunction& omega) {
    ConstantsBundle out;
    out.euler_gamma = exact::euler_gamma(precision_bits);
    {
        PrecisionGuard guard(precision_bits);
        out.exp_neg_gamma.precision_bits = precision_bits;
        out.exp_neg_gamma.value = boost::multiprecision::exp(-out.euler_gamma.value);
        out.C.precision_bits = precision_bits;
        out.C.value = 1 / (1 - out.exp_neg_gamma.value);
    }

    double lo = 0.1, hi = 0.9;
    if (!(kappa_equation(lo, omega) > 0.0 && kappa_equation(hi, omega) < 0.0))
        throw SolverError("kappa root not bracketed in [0.1, 0.9]; Buchstab grid is suspect");
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (kappa_equation(mid, omega) > 0.0 ? lo : hi) = mid;
    }
    const double kappa = 0.5 * (lo + hi);

    double k_err = 0.0;
    kappa_equation(kappa, omega, &k_err);
    const double dk = 1e-5;
    const double slope = (kappa_equation(kappa + dk, omega) - kappa_equation(kappa - dk, omega)) / (2 * dk);
    const double kappa_err = k_err / std::abs(slope) + (hi - lo);
    if (kappa_err > kKappaTolerance)
        throw SolverError("kappa error bound " + std::to_string(kappa_err) + " exceeds tolerance");

    const double tau = 1.0 / (4.0 + 2.0 * kappa);
    out.kappa = from_double(kappa, kappa_err, precision_bits);
    // d tau / d kappa = -2 tau^2
    out.tau = from_double(tau, 2.0 * tau * tau * kappa_err, precision_bits);
    {
        PrecisionGuard guard(precision_bits);
        out.tau.value = 1 / (4 + 2 * out.kappa.value);
    }
    return out;
}

ConstantsBundle constants(unsigned precision_bits) { return constants(precision_bits, solve_buchstab()); }

}  // namespace gapdeg::asymptotic
