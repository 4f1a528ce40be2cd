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

#ifndef POLARB_EXTREMAL_HPP
#define POLARB_EXTREMAL_HPP

#include "bits.hpp"
#include "exact.hpp"
#include "geom.hpp"
#include "report.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polarb::extremal {

/// Disjointness graph on generators. Two generators are adjacent iff they
/// meet trivially; non_neighbours(v) is the closed non-neighbourhood.
class CrossGraph {
public:
    static CrossGraph from_catalog(const geom::GeneratorCatalog& cat);
    static CrossGraph from_adjacency(std::vector<Bitset> adjacency);

    std::size_t size() const noexcept { return adj_.size(); }
    const Bitset& adjacency(std::size_t v) const { return adj_.at(v); }
    const Bitset& non_neighbours(std::size_t v) const { return non_.at(v); }
    /// Intersection of the closed non-neighbourhoods of `s`; every vertex
    /// when `s` is empty.
    Bitset common_non_neighbours(const Bitset& s) const;

private:
    std::vector<Bitset> adj_;
    std::vector<Bitset> non_;
};

struct CrossPair {
    Bitset Y;
    Bitset Z;
    bool maximal = false;
    std::string family = "other";

    std::vector<std::size_t> y_list() const { return Y.indices(); }
    std::vector<std::size_t> z_list() const { return Z.indices(); }
    std::uint64_t product() const { return Y.count() * Z.count(); }
    bool is_cross(const CrossGraph& g) const;
};

/// (Y, Z') with Y = nonN(Z), Z' = nonN(Y). Always a fixed point.
CrossPair cross_closure(const Bitset& Z, const CrossGraph& g);

inline constexpr unsigned kDefaultSweepLimit = 22;

/// Every maximal cross pair up to swapping sides, oriented so |Y| >= |Z|,
/// sorted by decreasing product. Throws ErrorCode::limit_exceeded when some
/// closed non-neighbourhood has more than `limit` vertices.
std::vector<CrossPair> enumerate_maximal_cross_pairs(const CrossGraph& g, unsigned limit = kDefaultSweepLimit);

/// Assigns a descriptive family label to each pair.
void label_families(const geom::GeneratorCatalog& cat, std::vector<CrossPair>& pairs);
std::string family_label(const geom::GeneratorCatalog& cat, const CrossPair& pair);

/// The two classes of a hyperbolic quadric under "codimension is even".
std::pair<Bitset, Bitset> bipartition_latins_greeks(const geom::GeneratorCatalog& cat);

/// Dimension profile of a maximum pair with Y != Z around G in Y.
Report verify_dimension_profile(const geom::GeneratorCatalog& cat, const CrossPair& pair, std::size_t G);

/// The members of Z meeting G in a hyperplane are the spans of each
/// hyperplane pi of G with perp(pi) ∩ H.
Report verify_zgh(const geom::GeneratorCatalog& cat, const CrossPair& pair, std::size_t G, std::size_t H);

/// span(G, H) of two disjoint generators of a parabolic quadric carries a
/// hyperbolic quadric of the same rank.
Report verify_hyperplane_section(const geom::GeneratorCatalog& cat, std::size_t G, std::size_t H);

struct TripleCensus {
    std::uint64_t q = 0;
    std::size_t lines = 0;
    std::size_t triples = 0;
    /// number of common transversals -> number of triples
    std::map<std::size_t, std::size_t> histogram;
    /// First triple (in index order) with exactly two transversals, if any.
    std::vector<std::size_t> two_transversal_witness;
    bool only_zero_or_two() const;
};

/// Common transversal counts over all triples of pairwise disjoint lines of
/// the symplectic generalized quadrangle W(3, q).
TripleCensus w3_triple_census(std::uint64_t q);
Report verify_w3_triples(std::uint64_t q);

/// If y1, y2 in Y meet in a hyperplane, every member of Z meets y1 ∩ y2.
/// Throws ErrorCode::invalid_argument when the pair is not maximal.
Report verify_hyperplane_meets(const geom::GeneratorCatalog& cat, const CrossPair& pair);

struct LocalSizes {
    std::uint64_t q = 0; ///< square root of the field order
    int d = 0;
    /// through[s]: generators through each s-subspace of G (s = 2..d)
    std::map<int, Integer> through;
    /// exact[t]: generators meeting G in exactly dimension t (t = 2..d)
    std::map<int, Integer> exact;
    Integer y_size, z_size;
    Integer y_poly, z_poly;
    bool quotient_counts_ok = true;
    std::size_t samples = 0;
    std::size_t sample_failures = 0;
};

/// Generators of H(7, q^2) meeting a fixed generator G in at least a 2-space
/// (Y) and at least a 3-space (Z), by counting through every subspace of G in
/// the quotient, plus a random spot check that Y and Z cross-intersect.
LocalSizes h7_local_sizes(std::uint64_t q, std::size_t samples = 10000, std::uint64_t seed = 20260101);

} // namespace polarb::extremal

#endif
