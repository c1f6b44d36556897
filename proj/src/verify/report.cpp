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

#include "gapdeg/verify/report.hpp"

#include <cmath>
#include <cstdio>

namespace gapdeg::verify {

namespace {

// JSON has no infinities or NaN; they are written as strings.
nlohmann::json number(double x) {
    if (std::isfinite(x)) return x;
    return format_double(x);
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["statement"] = r.statement;
    j["params"] = r.params;
    j["worst_deviation"] = number(r.worst_deviation);
    j["threshold"] = number(r.threshold);
    j["pass"] = r.pass;
    j["runtime_seconds"] = r.runtime_seconds;
    j["notes"] = r.notes;
    j["series_rows"] = r.series.size();
    return j;
}

nlohmann::json campaign_json(const std::vector<CheckReport>& reports) {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    int passed = 0;
    for (const auto& r : reports) {
        j["checks"].push_back(to_json(r));
        passed += r.pass ? 1 : 0;
    }
    j["passed"] = passed;
    j["failed"] = static_cast<int>(reports.size()) - passed;
    j["all_passed"] = passed == static_cast<int>(reports.size());
    return j;
}

void write_series_csv(std::ostream& os, const std::vector<CheckReport>& reports) {
    os << "kind,q,n,m,computed,predicted,rel_err\n";
    for (const auto& r : reports)
        for (const auto& row : r.series)
            os << row.kind << ',' << (row.q ? std::to_string(*row.q) : "-") << ',' << row.n << ',' << row.m << ','
               << format_double(row.computed) << ',' << format_double(row.predicted) << ','
               << format_double(row.rel_err) << '\n';
}

}  // namespace gapdeg::verify
