/*
   Copyright 2026 The polarb Authors

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

#ifndef POLARB_SCHEME_HPP
#define POLARB_SCHEME_HPP

#include "bits.hpp"
#include "exact.hpp"
#include "geom.hpp"
#include "qcount.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace polarb::scheme {

/// Relation bit-matrices A_0..A_d of the generator scheme: x R_i y iff
/// codim(x ∩ y) = i.
struct RelationData {
    int d = 0;
    std::size_t n = 0;
    /// A[i][x] is row x of A_i.
    std::vector<std::vector<Bitset>> A;
    std::vector<std::size_t> valencies;
    /// Row-major codimension table.
    std::vector<std::uint8_t> codim;

    int relation(std::size_t x, std::size_t y) const { return codim[x * n + y]; }
    std::vector<std::size_t> neighbours(int i, std::size_t x) const { return A[i][x].indices(); }
};

/// Throws ErrorCode::verification when the relations fail to partition the
/// pairs, are not symmetric, or are not regular.
RelationData build_relations(const geom::GeneratorCatalog& cat);
/// Build from an explicit codimension table (cache reader, tests).
RelationData relations_from_codims(int d, std::size_t n, std::vector<std::uint8_t> codim);

struct IntersectionNumbers {
    int d = 0;
    std::vector<std::size_t> table;

    std::size_t at(int i, int j, int k) const
    {
        const auto m = static_cast<std::size_t>(d + 1);
        return table[(static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * m + static_cast<std::size_t>(k)];
    }
};

/// Counts #{z : x R_i z, z R_j y} for every pair and checks it depends only
/// on the relation of (x, y). Throws ErrorCode::verification naming the
/// first inhomogeneous triple.
IntersectionNumbers check_intersection_numbers(const RelationData& rel);

struct SpectrumReport {
    bool ok = true;
    /// Relations whose annihilating product was checked on the full matrix.
    std::vector<int> annihilation_checked;
    std::vector<std::string> failures;
};

/// For each i, prod_r (A_i - P[r][i] I) = 0 in exact integer arithmetic
/// (materialized only for n <= 1000), and A_i A_j = sum_k p_ij^k A_k with
/// intersection matrices annihilated by the same P column.
SpectrumReport verify_spectrum(const RelationData& rel, const qcount::EigenData& eig);

/// E_j v = (1/n) sum_i Q[i][j] A_i v.
std::vector<Rational> project(const std::vector<Rational>& v, int j, const RelationData& rel,
                              const qcount::EigenData& eig);

/// Indices j with E_j v != 0. Also checks sum_j E_j v = v.
std::set<int> eigenspace_support(const std::vector<Rational>& v, const RelationData& rel,
                                 const qcount::EigenData& eig);

/// Dense exact E_j; for small n only.
std::vector<std::vector<Rational>> idempotent(int j, const RelationData& rel, const qcount::EigenData& eig);

std::vector<Rational> characteristic_vector(std::size_t n, const std::vector<std::size_t>& members);

} // namespace polarb::scheme

#endif
