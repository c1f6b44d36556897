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

#include "gapdeg/asymptotic/dfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gapdeg/exact/real.hpp"

namespace gapdeg::asymptotic {

namespace {

constexpr double kGaussNode = 0.77459666924148337704;  // sqrt(3/5)
constexpr double kGaussOuter = 5.0 / 9.0;
constexpr double kGaussInner = 8.0 / 9.0;

std::vector<double> solve_raw(double u_max, double h, const GridFunction& omega) {
    const long per_unit = std::lround(1.0 / h);
    if (per_unit < 4 || std::abs(1.0 / h - static_cast<double>(per_unit)) > 1e-9)
        throw std::invalid_argument("solve_d: step must be 1/M for an integer M >= 4");
    const long n = std::lround(u_max * static_cast<double>(per_unit));

    GridFunction d;
    d.origin = 0.0;
    d.step = h;
    d.values.assign(static_cast<std::size_t>(n) + 1, 0.0);
    d.tail_start = std::numeric_limits<double>::infinity();

    const double panel = 8.0 * h;
    std::vector<double> cuts;
    for (long i = 0; i <= n; ++i) {
        const double u = static_cast<double>(i) * h;
        if (i <= per_unit) {
            d.values[static_cast<std::size_t>(i)] = 1.0;
            continue;
        }
        const double b = (u - 1.0) / 2.0;
        cuts.assign({0.0, b});
        for (double t = 1.0; t < b; t += 1.0) cuts.push_back(t);
        for (double k = 2.0; k < u; k += 1.0) {
            const double v = (u - k) / (k + 1.0);
            if (v > 0.0 && v < b) cuts.push_back(v);
        }
        const double vt = (u - omega.tail_start) / (omega.tail_start + 1.0);
        if (vt > 0.0 && vt < b) cuts.push_back(vt);
        std::sort(cuts.begin(), cuts.end());

        double integral = 0.0;
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            const double lo = cuts[c];
            const double len = cuts[c + 1] - lo;
            if (len <= 1e-15) continue;
            const long pieces = std::max(1L, static_cast<long>(std::ceil(len / panel)));
            const double width = len / static_cast<double>(pieces);
            const double half = width / 2.0;
            for (long p = 0; p < pieces; ++p) {
                const double mid = lo + (static_cast<double>(p) + 0.5) * width;
                double acc = 0.0;
                for (int g = -1; g <= 1; ++g) {
                    const double v = mid + g * kGaussNode * half;
                    const double wgt = g == 0 ? kGaussInner : kGaussOuter;
                    acc += wgt * d(v) / (v + 1.0) * omega((u - v) / (v + 1.0));
                }
                integral += acc * half;
            }
        }
        d.values[static_cast<std::size_t>(i)] = 1.0 - integral;
    }
    return d.values;
}

}  // namespace

GridFunction solve_d(double u_max, double h, const GridFunction& omega) {
    if (u_max < 1.0) throw std::invalid_argument("solve_d: u_max must be >= 1");
    if (omega.end() < 2.0) throw std::invalid_argument("solve_d: Buchstab grid must cover [1, 2]");

    GridFunction d;
    d.origin = 0.0;
    d.step = h;
    d.values = solve_raw(u_max, h, omega);
    d.below_value = 0.0;

    const auto coarse = solve_raw(u_max, 2.0 * h, omega);
    d.error_bounds.assign(d.size(), 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < d.size(); i += 2) {
        const std::size_t c = std::min(i / 2, coarse.size() - 1);
        d.error_bounds[i] = std::max(std::abs(d.values[i] - coarse[c]) / 15.0, 1e-14);
        worst = std::max(worst, d.error_bounds[i]);
    }
    for (std::size_t i = 1; i < d.size(); i += 2)
        d.error_bounds[i] = std::max(d.error_bounds[i - 1], i + 1 < d.size() ? d.error_bounds[i + 1] : 0.0);
    if (worst > kDTolerance)
        throw SolverError("d(u) error estimate " + std::to_string(worst) + " exceeds tolerance; refine the step");

    const double gamma = exact::euler_gamma(64).to_double();
    const double c_const = 1.0 / (1.0 - std::exp(-gamma));
    d.tail_kind = TailKind::reciprocal;
    d.tail_start = d.end();
    d.tail_value = c_const;
    d.tail_error_bound = std::abs(d.values.back() * (d.end() + 1.0) / c_const - 1.0);
    return d;
}

GridFunction solve_d_default() { return solve_d(kDefaultDMax, kDefaultStep, solve_buchstab()); }

}  // namespace gapdeg::asymptotic
