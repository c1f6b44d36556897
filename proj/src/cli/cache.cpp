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

#include "gapdeg/cli/cache.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gapdeg::cli {

namespace {

constexpr std::string_view kMagic = "gapdeg-table-cache";

std::string join_lines(const std::vector<std::string>& values) {
    std::string out;
    for (const auto& v : values) out += v + '\n';
    return out;
}

std::string hex(std::uint64_t x) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

}  // namespace

std::string CacheKey::str() const {
    return kind + " q=" + std::to_string(q) + " m=" + std::to_string(m) + " n_max=" + std::to_string(n_max) +
           " engine=" + engine_version;
}

std::string CacheKey::filename() const {
    return kind + "_q" + std::to_string(q) + "_m" + std::to_string(m) + "_n" + std::to_string(n_max) + "_v" +
           engine_version + ".txt";
}

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<std::vector<std::string>> TableCache::load(const CacheKey& key) const {
    std::ifstream in(dir_ / key.filename());
    if (!in) return std::nullopt;
    std::string magic, key_line, sum_line;
    if (!std::getline(in, magic) || magic != kMagic) return std::nullopt;
    if (!std::getline(in, key_line) || key_line != key.str()) return std::nullopt;
    if (!std::getline(in, sum_line)) return std::nullopt;
    std::vector<std::string> values;
    for (std::string line; std::getline(in, line);) values.push_back(line);
    if (values.size() != key.n_max + 1 || sum_line != hex(fnv1a(join_lines(values)))) return std::nullopt;
    return values;
}

void TableCache::store(const CacheKey& key, const std::vector<std::string>& values) const {
    std::filesystem::create_directories(dir_);
    const auto target = dir_ / key.filename();
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << kMagic << '\n' << key.str() << '\n' << hex(fnv1a(join_lines(values))) << '\n' << join_lines(values);
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace gapdeg::cli
