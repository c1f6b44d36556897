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

#ifndef GAPDEG_ORACLE_CENSUS_HPP
#define GAPDEG_ORACLE_CENSUS_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gapdeg/exact/types.hpp"
#include "gapdeg/oracle/field.hpp"
#include "gapdeg/oracle/poly.hpp"

namespace gapdeg::oracle {

/// Raised when two independent evaluations inside the oracle disagree
/// (gap criterion vs. prefix criterion, sieve vs. trial division).
class OracleInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr unsigned kDefaultPermCensusMax = 60;

struct CensusOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
    /// Degrees with q^n at most this are also run through factor(), checking
    /// that the factorization reassembles to F and matches the sieve.
    std::uint64_t factor_check_limit = 0;
};

/// Counts over all q^n monic polynomials of degree n; index m = 0..n.
struct PolyCensus {
    unsigned q = 0;
    unsigned n = 0;
    std::vector<mpz_class> f_count;  ///< max gap of A_1(F) <= m
    std::vector<mpz_class> r_count;  ///< no nonconstant divisor of degree <= m
    std::uint64_t polynomials = 0;
    std::uint64_t factor_checked = 0;
};

/// Censuses for degrees 0..n_max in one pass.
///
/// Every F gets the multiset of its irreducible-factor degrees from a sieve:
/// for each irreducible P with deg P <= n/2 and each monic cofactor G, the
/// pattern of P*G is pattern(G) + {deg P}; polynomials never reached are
/// irreducible. A polynomial reached more than once must receive the same
/// pattern every time. Throws ResourceLimitError if q^n_max exceeds the
/// budget, OracleInconsistency on any internal disagreement.
std::vector<PolyCensus> census_poly_upto(const Field& field, unsigned n_max, const CensusOptions& opts = {});

PolyCensus census_poly(const Field& field, unsigned n, const CensusOptions& opts = {});

/// A partition of n as (length, count) pairs with increasing length.
struct CycleType {
    std::vector<std::pair<unsigned, unsigned>> parts;
    mpz_class weight;  ///< n! / prod_l (l^{a_l} a_l!)

    std::vector<unsigned> lengths() const;
};

/// All cycle types of S_n in lexicographic order of their sorted length lists.
std::vector<CycleType> cycle_types(unsigned n);

struct PermCensus {
    unsigned n = 0;
    std::vector<exact::ExactRatio> g;  ///< index m = 0..n
    std::vector<exact::ExactRatio> p;
    std::size_t types = 0;
};

/// Weighted census over cycle types. Checks that the weights sum to n! and
/// that the prefix criterion agrees with max gap on every type. Throws
/// ResourceLimitError for n > max_n.
PermCensus census_perm(unsigned n, unsigned max_n = kDefaultPermCensusMax);

}  // namespace gapdeg::oracle

#endif
