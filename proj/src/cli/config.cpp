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

#include "gapdeg/cli/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace gapdeg::cli {

void Config::validate() const {
    if (precision_bits < 53 || precision_bits > 1u << 16)
        throw std::invalid_argument("precision_bits must lie in [53, 65536]");
    const double inv = 1.0 / step;
    if (!(step > 0.0) || inv != std::round(inv) || std::fmod(inv, 8.0) != 0.0 || inv < 256.0)
        throw std::invalid_argument("step must be 1/M with M a multiple of 8 and M >= 256");
    if (!(u_max >= 1.0) || u_max > 200.0) throw std::invalid_argument("u_max must lie in [1, 200]");
    if (enumeration_budget == 0) throw std::invalid_argument("enumeration_budget must be positive");
    if (exact_threshold == 0) throw std::invalid_argument("exact_threshold must be positive");
    if (output_dir.empty()) throw std::invalid_argument("output_dir must not be empty");
}

Config config_from_json(const nlohmann::json& j, Config base) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "precision_bits") base.precision_bits = value.get<unsigned>();
            else if (key == "step") base.step = value.get<double>();
            else if (key == "u_max") base.u_max = value.get<double>();
            else if (key == "enumeration_budget") base.enumeration_budget = value.get<std::uint64_t>();
            else if (key == "exact_threshold") base.exact_threshold = value.get<std::size_t>();
            else if (key == "output_dir") base.output_dir = value.get<std::string>();
            else if (key == "cache") base.cache = value.get<bool>();
            else throw std::invalid_argument("unknown config key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("config key '" + key + "': " + e.what());
        }
    }
    base.validate();
    return base;
}

Config load_config(const std::filesystem::path& path, Config base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config file " + path.string() + ": " + e.what());
    }
    return config_from_json(j, std::move(base));
}

nlohmann::json to_json(const Config& cfg) {
    return {{"precision_bits", cfg.precision_bits}, {"step", cfg.step},
            {"u_max", cfg.u_max},                   {"enumeration_budget", cfg.enumeration_budget},
            {"exact_threshold", cfg.exact_threshold}, {"output_dir", cfg.output_dir},
            {"cache", cfg.cache}};
}

void apply_environment(Config& cfg) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') cfg.output_dir = dir;
}

}  // namespace gapdeg::cli
