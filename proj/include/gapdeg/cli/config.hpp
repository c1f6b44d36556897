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

#ifndef GAPDEG_CLI_CONFIG_HPP
#define GAPDEG_CLI_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace gapdeg::cli {

/// Overrides output_dir when set and non-empty.
inline constexpr const char* kOutputDirEnv = "GAPDEG_OUTPUT_DIR";

struct Config {
    unsigned precision_bits = 256;
    double step = 1.0 / 1024.0;  ///< grid step for w and d; must be 1/M with 8 | M
    double u_max = 20.0;         ///< d is solved on [0, u_max]
    std::uint64_t enumeration_budget = 10'000'000;
    std::size_t exact_threshold = 200;  ///< count/table switch to floating point above this n
    std::string output_dir = ".";
    bool cache = true;

    /// Throws std::invalid_argument naming the first offending field.
    void validate() const;
};

/// Keys as in Config; unknown keys are rejected.
Config config_from_json(const nlohmann::json& j, Config base = {});
Config load_config(const std::filesystem::path& path, Config base = {});
nlohmann::json to_json(const Config& cfg);
/// Applies kOutputDirEnv.
void apply_environment(Config& cfg);

}  // namespace gapdeg::cli

#endif
