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

#ifndef GAPDEG_EXACT_NUMERIC_HPP
#define GAPDEG_EXACT_NUMERIC_HPP

// Floating-point evaluation of the same recurrences as counting.hpp, for
// n far beyond the range where exact rationals are practical.
//
// Memory: the f and g tables never materialize the triangular array
// r(a, b) / p(a, b); each column b is built, folded into the running sums and
// dropped, so memory is O(n_max) and time O(n_max^2) (times a small
// correction-band width for polynomials).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gapdeg/exact/types.hpp"

namespace gapdeg::exact {

/// Relative error above which a table is flagged as having lost precision.
inline constexpr double kPrecisionWarningThreshold = 1e-8;

/// Exact tables are used by default up to this degree; numeric beyond.
inline constexpr std::size_t kExactThreshold = 200;

enum class TableKind { r, p, f, g };

TableKind parse_table_kind(const std::string& name);
std::string to_string(TableKind kind);

/// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct NumericTable {
    std::vector<double> values;
    /// Propagated absolute error estimate per entry.
    std::vector<double> abs_error;
    double max_rel_error = 0.0;
    bool precision_warning = false;
};

NumericTable numeric_rough_column(FieldSize q, unsigned m, std::size_t n_max);
NumericTable numeric_perm_column(unsigned m, std::size_t n_max);
NumericTable numeric_f_table(FieldSize q, unsigned m, std::size_t n_max);
NumericTable numeric_g_table(unsigned m, std::size_t n_max);

/// Dispatches on kind; q is required for r and f.
NumericTable numeric_table(TableKind kind, std::optional<FieldSize> q, unsigned m, std::size_t n_max);

struct OverlapReport {
    double max_rel_deviation = 0.0;
    std::size_t worst_n = 0;
    bool ok = false;
};

/// Compares the numeric table with the exact one on n in [lo, hi]; ok when the
/// relative deviation stays below 1e-10 throughout.
OverlapReport validate_overlap(TableKind kind, std::optional<FieldSize> q, unsigned m, std::size_t lo = 150,
                               std::size_t hi = kExactThreshold);

}  // namespace gapdeg::exact

#endif
