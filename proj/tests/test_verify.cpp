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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "gapdeg/verify/checks.hpp"
#include "gapdeg/verify/report.hpp"

using namespace gapdeg::verify;

TEST_CASE("report serialization") {
    CheckReport r;
    r.id = "x";
    r.statement = "s";
    r.worst_deviation = std::numeric_limits<double>::infinity();
    r.threshold = 1.0;
    r.decide();
    CHECK_FALSE(r.pass);
    r.series.push_back({"f", 2u, 10, 1, 0.5, 0.25, 1.0});
    r.series.push_back({"g", std::nullopt, 10, 1, 0.5, 0.5, 0.0});
    const auto j = campaign_json({r});
    CHECK(j["failed"] == 1);
    CHECK(j["all_passed"] == false);
    CHECK(j["checks"][0]["worst_deviation"] == "inf");
    CHECK(j["checks"][0]["series_rows"] == 2);
    std::ostringstream csv;
    write_series_csv(csv, {r});
    CHECK(csv.str() == "kind,q,n,m,computed,predicted,rel_err\nf,2,10,1,0.5,0.25,1\ng,-,10,1,0.5,0.5,0\n");
    CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("fitted constant") {
    std::vector<FitSample> s;
    for (int n = 1; n <= 40; ++n) {
        const double shape = 1.0 / n;
        s.push_back({3.0 * shape, shape, n <= 20, {}});
    }
    auto r = fitted_check("fit", "dev <= B/n", "", s, 0.0);
    CHECK(r.pass);
    CHECK(r.worst_deviation == doctest::Approx(3.0));
    CHECK(r.threshold == doctest::Approx(6.0));

    // A deviation decaying slower than the shape breaks the fit.
    s.clear();
    for (int n = 1; n <= 40; ++n) s.push_back({1.0 / std::sqrt(n), 1.0 / n, n <= 5, {}});
    CHECK_FALSE(fitted_check("fit", "", "", s, 0.0).pass);

    // Deviations under the noise floor never count.
    s = {{1e-12, 1e-20, false, {}}, {0.0, 1.0, true, {}}};
    CHECK(fitted_check("fit", "", "", s, 1e-11).pass);
}

TEST_CASE("small campaign pieces") {
    const auto oracle = check_oracle_equivalence({2, 3}, 1000, 12, 100);
    CHECK(oracle.pass);
    CHECK(oracle.worst_deviation == 0.0);

    CampaignConfig cfg;
    cfg.identity_k = 120;
    cfg.lb_n_max = 12;
    const auto ids = check_identities(cfg);
    CHECK(ids.id == "identities");
    CHECK(ids.notes.size() >= 3);

    Campaign c(cfg);
    CHECK_THROWS_AS(c.run("no-such-check"), std::invalid_argument);
    const auto lam = c.run("lambda_harmonic");
    CHECK(lam.pass);
    CHECK(lam.runtime_seconds >= 0.0);
    const auto rap = c.run("rough_vs_perm");
    CHECK(rap.pass);
    CHECK(rap.series.size() > 1000);
    CHECK(Campaign::check_ids().size() == 20);
}
