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

#include "gapdeg/asymptotic/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gapdeg::asymptotic {

double GridFunction::operator()(double u) const {
    if (values.empty()) throw std::logic_error("empty grid function");
    if (u < origin) return below_value;
    if (u > tail_start) return tail(u);

    const auto n = static_cast<long>(values.size());
    const double x = (u - origin) / step;
    long j = std::clamp(static_cast<long>(std::floor(x)), 0L, n - 1);
    if (x == static_cast<double>(j)) return values[static_cast<std::size_t>(j)];
    if (n < 4) {
        j = std::min(j, n - 2);
        const double t = x - static_cast<double>(j);
        return (1 - t) * values[static_cast<std::size_t>(j)] + t * values[static_cast<std::size_t>(j + 1)];
    }

    // Grid indices lying in the integer segment that contains u.
    const double knot = std::floor(origin + static_cast<double>(j) * step);
    long lo = static_cast<long>(std::ceil((knot - origin) / step));
    long hi = static_cast<long>(std::floor((knot + 1.0 - origin) / step));
    lo = std::max(lo, 0L);
    hi = std::min(hi, n - 1);
    if (hi - lo < 3) {
        lo = 0;
        hi = n - 1;
    }
    const long s = std::clamp(j - 1, lo, hi - 3);

    const double t = x - static_cast<double>(s);
    const double t1 = t - 1.0, t2 = t - 2.0, t3 = t - 3.0;
    const double* v = values.data() + s;
    return -t1 * t2 * t3 / 6.0 * v[0] + t * t2 * t3 / 2.0 * v[1] - t * t1 * t3 / 2.0 * v[2] + t * t1 * t2 / 6.0 * v[3];
}

double GridFunction::error_bound(double u) const {
    if (u < origin) return 0.0;
    if (u > tail_start) return tail_bound(u);
    if (error_bounds.empty()) return 0.0;
    const auto n = static_cast<long>(error_bounds.size());
    const long j = std::clamp(static_cast<long>(std::floor((u - origin) / step)), 0L, n - 1);
    const long k = std::min(j + 1, n - 1);
    return std::max(error_bounds[static_cast<std::size_t>(j)], error_bounds[static_cast<std::size_t>(k)]);
}

double GridFunction::tail(double u) const {
    return tail_kind == TailKind::constant ? tail_value : tail_value / (u + 1.0);
}

double GridFunction::tail_bound(double u) const {
    if (tail_kind == TailKind::constant) return std::exp(-std::lgamma(u + 1.0));
    const double r = tail_start / u;
    return tail_error_bound * r * r * tail(u);
}

void GridFunction::write_csv(std::ostream& os) const {
    os << "u,value,error_bound\n";
    char buf[96];
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double err = error_bounds.empty() ? 0.0 : error_bounds[i];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid_point(i), values[i], err);
        os << buf;
    }
}

}  // namespace gapdeg::asymptotic
