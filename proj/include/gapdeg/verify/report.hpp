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

#ifndef GAPDEG_VERIFY_REPORT_HPP
#define GAPDEG_VERIFY_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace gapdeg::verify {

/// One row of a convergence series.
struct SeriesRow {
    std::string kind;
    std::optional<unsigned> q;  ///< empty for permutations
    unsigned long n = 0;
    unsigned m = 0;
    double computed = 0.0;
    double predicted = 0.0;
    double rel_err = 0.0;
};

struct CheckReport {
    std::string id;
    std::string statement;  ///< the property checked, in words
    std::string params;     ///< parameter range
    double worst_deviation = 0.0;
    double threshold = 0.0;
    bool pass = false;  ///< worst_deviation <= threshold
    double runtime_seconds = 0.0;
    std::vector<std::string> notes;
    std::vector<SeriesRow> series;

    /// Sets pass from the deviation and threshold.
    void decide() { pass = worst_deviation <= threshold; }
};

nlohmann::json to_json(const CheckReport& report);
/// {"checks": [...], "passed": n, "failed": n, "all_passed": bool}
nlohmann::json campaign_json(const std::vector<CheckReport>& reports);

/// Header "kind,q,n,m,computed,predicted,rel_err"; q is "-" for permutations;
/// floats carry 17 significant digits.
void write_series_csv(std::ostream& os, const std::vector<CheckReport>& reports);

/// "%.17g" rendering shared by every CSV writer.
std::string format_double(double x);

}  // namespace gapdeg::verify

#endif
