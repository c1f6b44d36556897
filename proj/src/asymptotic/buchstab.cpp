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

#include "gapdeg/asymptotic/buchstab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gapdeg/exact/real.hpp"

namespace gapdeg::asymptotic {

namespace {

long steps_per_unit(double h) {
    const double inv = 1.0 / h;
    const long m = std::lround(inv);
    if (h <= 0.0 || std::abs(inv - static_cast<double>(m)) > 1e-9 || m < 4)
        throw std::invalid_argument("grid step must be 1/M for an integer M >= 4");
    return m;
}

// Integral of the cubic through w[j+s..j+s+3] over panel [x_j, x_{j+1}], in units of h.
double panel_integral(const std::vector<double>& w, long j, long per_unit) {
    const long t = j % per_unit;
    const auto at = [&](long i) { return w[static_cast<std::size_t>(i)]; };
    if (t == 0) return (9 * at(j) + 19 * at(j + 1) - 5 * at(j + 2) + at(j + 3)) / 24.0;
    if (t == per_unit - 1) return (at(j - 2) - 5 * at(j - 1) + 19 * at(j) + 9 * at(j + 1)) / 24.0;
    return (-at(j - 1) + 13 * at(j) + 13 * at(j + 1) - at(j + 2)) / 24.0;
}

std::vector<double> solve_raw(double u_max, double h) {
    const long per_unit = steps_per_unit(h);
    const long n = std::lround((u_max - 1.0) * static_cast<double>(per_unit));
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    std::vector<double> cumulative(1, 0.0);  // cumulative[j] = int_1^{x_j} w
    for (long i = 0; i <= n; ++i) {
        const double x = 1.0 + static_cast<double>(i) * h;
        if (i <= per_unit) {
            w[static_cast<std::size_t>(i)] = 1.0 / x;
            continue;
        }
        const long upper = i - per_unit;
        while (static_cast<long>(cumulative.size()) <= upper) {
            const long j = static_cast<long>(cumulative.size()) - 1;
            cumulative.push_back(cumulative.back() + h * panel_integral(w, j, per_unit));
        }
        w[static_cast<std::size_t>(i)] = (1.0 + cumulative[static_cast<std::size_t>(upper)]) / x;
    }
    return w;
}

}  // namespace

double buchstab_closed_form(double u) {
    if (u < 1.0) return 0.0;
    if (u <= 2.0) return 1.0 / u;
    if (u <= 3.0) return (1.0 + std::log(u - 1.0)) / u;
    return std::numeric_limits<double>::quiet_NaN();
}

GridFunction solve_buchstab(double u_max, double h) {
    if (u_max < 2.0) throw std::invalid_argument("solve_buchstab: u_max must be >= 2");
    if (h > 1.0 / 256.0) throw std::invalid_argument("solve_buchstab: step must be <= 2^-8");
    const long per_unit = steps_per_unit(h);

    GridFunction w;
    w.origin = 1.0;
    w.step = h;
    w.values = solve_raw(u_max, h);
    w.below_value = 0.0;
    w.tail_kind = TailKind::constant;
    w.tail_start = w.end();
    w.tail_value = std::exp(-exact::euler_gamma(64).to_double());

    double worst = 0.0;
    for (std::size_t i = 0; i < w.size() && w.grid_point(i) <= 3.0; ++i)
        worst = std::max(worst, std::abs(w.values[i] - buchstab_closed_form(w.grid_point(i))));
    if (worst > 10.0 * std::pow(h, 4))
        throw SolverError("Buchstab grid misses the closed form on [1, 3] by " + std::to_string(worst) +
                          "; step too coarse");

    // Richardson estimate against the doubled step, where that grid is legal.
    w.error_bounds.assign(w.size(), 0.0);
    if (per_unit % 2 == 0 && per_unit / 2 >= 4) {
        const auto coarse = solve_raw(u_max, 2.0 * h);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const std::size_t c = std::min(i / 2, coarse.size() - 1);
            const double diff = i % 2 == 0 ? std::abs(w.values[i] - coarse[c]) / 15.0 : 0.0;
            w.error_bounds[i] = std::max(diff, 1e-15);
        }
        for (std::size_t i = 1; i + 1 < w.size(); i += 2)
            w.error_bounds[i] = std::max(w.error_bounds[i - 1], w.error_bounds[i + 1]);
        if (w.size() % 2 == 0) w.error_bounds.back() = w.error_bounds[w.size() - 2];
    }
    return w;
}

}  // namespace gapdeg::asymptotic
