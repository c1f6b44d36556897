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

#ifndef GAPDEG_VERIFY_CHECKS_HPP
#define GAPDEG_VERIFY_CHECKS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "gapdeg/asymptotic/predict.hpp"
#include "gapdeg/verify/report.hpp"

namespace gapdeg::verify {

/// Ranges and thresholds of the verification campaign. The tolerances are
/// engineering choices; the O-constants they stand in for are unknown.
struct CampaignConfig {
    std::vector<unsigned> poly_q{2, 3, 4, 5};
    std::uint64_t poly_budget = 10'000'000;  ///< census covers q^n <= budget
    std::uint64_t factor_check_limit = 100'000;
    unsigned perm_n_max = 40;

    std::vector<unsigned> dual_q{2, 3, 5};
    unsigned dual_n_max = 200;
    unsigned dual_m_max = 20;

    unsigned long numeric_n = 2000;
    unsigned long decay_reference_n = 500;
    double cq_stability = 0.005;
    double eta_stability = 1e-2;
    double ng_tolerance = 0.02;
    double gd_tolerance = 0.02;

    unsigned identity_k = 200;
    unsigned lb_n_max = 30;
    double fit_growth = 2.0;
};

/// A deviation paired with the bound shape it is measured against.
struct FitSample {
    double deviation = 0.0;
    double shape = 0.0;
    bool training = false;
    SeriesRow row;
};

/// Fits B = max over training samples of max(deviation - noise_floor, 0) / shape
/// and passes when the same ratio over all samples stays within growth * B.
CheckReport fitted_check(std::string id, std::string statement, std::string params,
                         const std::vector<FitSample>& samples, double noise_floor, double growth = 2.0);

/// Exact equality of the recurrence tables with the brute-force censuses.
/// Every mismatch is counted; the first few are listed in the notes.
CheckReport check_oracle_equivalence(const std::vector<unsigned>& q_list, std::uint64_t budget, unsigned n_max_perm,
                                     std::uint64_t factor_check_limit = 0);

/// Runs the campaign's checks, sharing solved grids and tables between them.
class Campaign {
public:
    explicit Campaign(CampaignConfig cfg = {});
    ~Campaign();
    Campaign(const Campaign&) = delete;
    Campaign& operator=(const Campaign&) = delete;

    /// Every id accepted by run(), in campaign order.
    static const std::vector<std::string>& check_ids();

    /// Throws std::invalid_argument for an unknown id.
    CheckReport run(const std::string& id);
    std::vector<CheckReport> run_all();

    const CampaignConfig& config() const noexcept { return cfg_; }
    /// Solves w and d on first use.
    const asymptotic::Predictor& predictor();

private:
    struct Tables;

    CheckReport dispatch(const std::string& id);

    CampaignConfig cfg_;
    std::unique_ptr<asymptotic::Predictor> predictor_;
    std::unique_ptr<Tables> tables_;
};

/// One check by id with a throwaway campaign.
CheckReport check_theorem(const std::string& kind, const CampaignConfig& cfg = {});
/// The partial-sum identities and the exact inequality between neighbouring
/// columns of f.
CheckReport check_identities(const CampaignConfig& cfg = {});

}  // namespace gapdeg::verify

#endif
