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

#ifndef GAPDEG_ORACLE_DEGREE_SET_HPP
#define GAPDEG_ORACLE_DEGREE_SET_HPP

#include <cstdint>
#include <vector>

#include "gapdeg/oracle/poly.hpp"

namespace gapdeg::oracle {

/// Subset of [0, bound] as a bit vector.
class DegreeSet {
public:
    explicit DegreeSet(std::size_t bound);

    /// Subset sums of `parts` (a multiset), by shift-or.
    static DegreeSet subset_sums(const std::vector<unsigned>& parts);

    std::size_t bound() const noexcept { return bound_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    /// this |= this << shift, truncated at bound().
    void or_shifted(std::size_t shift);

    std::vector<unsigned> elements() const;

    friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

private:
    void trim();

    std::size_t bound_;
    std::vector<std::uint64_t> words_;
};

/// Largest difference between consecutive elements; 0 for a singleton.
/// Requires 0 in S.
unsigned max_gap(const DegreeSet& s);

/// The set A_1 of divisor degrees: subset sums of the factor degrees, each
/// factor contributing `multiplicity` copies.
DegreeSet divisor_degree_set(const Factorization& fact);

/// Parts sorted ascending satisfy l_i <= m + (l_1 + ... + l_{i-1}) for all i.
/// Equivalent to max_gap(subset_sums(parts)) <= m.
bool prefix_criterion(std::vector<unsigned> parts, unsigned m);

}  // namespace gapdeg::oracle

#endif
