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

#ifndef GAPDEG_CLI_CACHE_HPP
#define GAPDEG_CLI_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gapdeg::cli {

/// Bumped whenever a table engine changes its output.
inline constexpr const char* kEngineVersion = "1";

struct CacheKey {
    std::string kind;  ///< table kind plus mode, e.g. "f-exact"
    unsigned long q = 0;  ///< 0 for permutation tables
    unsigned m = 0;
    std::size_t n_max = 0;
    std::string engine_version = kEngineVersion;

    std::string str() const;
    std::string filename() const;
};

std::uint64_t fnv1a(std::string_view data);

/// Tables stored one value per line under a directory. Entries whose header,
/// key or checksum do not match are treated as missing. A single writer per
/// directory is assumed; entries are replaced by rename.
class TableCache {
public:
    explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::optional<std::vector<std::string>> load(const CacheKey& key) const;
    void store(const CacheKey& key, const std::vector<std::string>& values) const;
    const std::filesystem::path& dir() const noexcept { return dir_; }

private:
    std::filesystem::path dir_;
};

}  // namespace gapdeg::cli

#endif
