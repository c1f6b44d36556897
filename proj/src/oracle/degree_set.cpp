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

#include "gapdeg/oracle/degree_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gapdeg::oracle {

DegreeSet::DegreeSet(std::size_t bound) : bound_(bound), words_(bound / 64 + 1, 0) {}

void DegreeSet::trim() {
    const std::size_t used = bound_ % 64 + 1;
    if (used < 64) words_.back() &= (std::uint64_t{1} << used) - 1;
}

void DegreeSet::or_shifted(std::size_t shift) {
    if (shift > bound_) return;
    const std::size_t ws = shift / 64, bs = shift % 64;
    for (std::size_t i = words_.size(); i-- > ws;) {
        std::uint64_t v = words_[i - ws] << bs;
        if (bs != 0 && i > ws) v |= words_[i - ws - 1] >> (64 - bs);
        words_[i] |= v;
    }
    trim();
}

DegreeSet DegreeSet::subset_sums(const std::vector<unsigned>& parts) {
    DegreeSet s(std::accumulate(parts.begin(), parts.end(), std::size_t{0}));
    s.set(0);
    for (unsigned p : parts) s.or_shifted(p);
    return s;
}

std::vector<unsigned> DegreeSet::elements() const {
    std::vector<unsigned> out;
    for (std::size_t i = 0; i <= bound_; ++i)
        if (test(i)) out.push_back(static_cast<unsigned>(i));
    return out;
}

unsigned max_gap(const DegreeSet& s) {
    if (!s.test(0)) throw std::invalid_argument("max_gap: set must contain 0");
    unsigned gap = 0;
    std::size_t last = 0;
    for (std::size_t i = 1; i <= s.bound(); ++i) {
        if (!s.test(i)) continue;
        gap = std::max(gap, static_cast<unsigned>(i - last));
        last = i;
    }
    return gap;
}

DegreeSet divisor_degree_set(const Factorization& fact) {
    std::vector<unsigned> parts;
    for (const auto& [poly, mult] : fact) parts.insert(parts.end(), mult, static_cast<unsigned>(poly.degree()));
    return DegreeSet::subset_sums(parts);
}

bool prefix_criterion(std::vector<unsigned> parts, unsigned m) {
    std::sort(parts.begin(), parts.end());
    unsigned long prefix = 0;
    for (unsigned l : parts) {
        if (l > m + prefix) return false;
        prefix += l;
    }
    return true;
}

}  // namespace gapdeg::oracle
