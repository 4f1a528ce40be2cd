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

#include "extremal.hpp"

#include <doctest.h>

using namespace polarb;
using namespace polarb::extremal;

namespace {

geom::GeneratorCatalog catalog(Family f, int d, std::uint64_t q)
{
    return geom::GeneratorCatalog::enumerate(geom::PolarSpace::make(f, d, q));
}

Bitset bits(std::size_t n, std::initializer_list<std::size_t> xs)
{
    Bitset b(n);
    for (auto x : xs)
        b.set(x);
    return b;
}

std::map<std::string, std::set<std::uint64_t>> families(const std::vector<CrossPair>& pairs)
{
    std::map<std::string, std::set<std::uint64_t>> out;
    for (const auto& p : pairs)
        out[p.family].insert(p.product());
    return out;
}

} // namespace

TEST_CASE("graph construction")
{
    const auto cat = catalog(Family::Hodd, 2, 4);
    const auto g = CrossGraph::from_catalog(cat);
    for (std::size_t v = 0; v < g.size(); ++v) {
        CHECK_FALSE(g.adjacency(v).test(v));
        CHECK(g.non_neighbours(v).test(v));
        CHECK(g.non_neighbours(v).count() == 11);
    }
    std::vector<Bitset> bad(2, Bitset(2));
    bad[0].set(1);
    CHECK_THROWS(CrossGraph::from_adjacency(bad));
}

TEST_CASE("closure")
{
    const auto cat = catalog(Family::Hodd, 2, 4);
    const auto g = CrossGraph::from_catalog(cat);
    const std::size_t n = g.size();
    const auto all = cross_closure(Bitset(n), g);
    CHECK(all.Y == Bitset::full(n));
    CHECK(all.Z.none());
    CHECK(all.maximal);

    const auto star = cross_closure(bits(n, {0}), g);
    CHECK(star.Y.count() == 11);
    CHECK(star.Z == bits(n, {0}));

    std::size_t m = 1;
    while (cat.meet_dim(0, m) != 1)
        ++m;
    const auto pencil = cross_closure(bits(n, {0, m}), g);
    CHECK(pencil.Y == pencil.Z);
    CHECK(pencil.Y.count() == 3);
    CHECK(family_label(cat, pencil) == "point-pencil-EKR");

    const auto again = cross_closure(pencil.Z, g);
    CHECK(again.Y == pencil.Y);
    CHECK(again.Z == pencil.Z);
}

TEST_CASE("complete sweep on H(3,4)")
{
    const auto cat = catalog(Family::Hodd, 2, 4);
    const auto g = CrossGraph::from_catalog(cat);
    auto pairs = enumerate_maximal_cross_pairs(g);
    label_families(cat, pairs);
    const auto fam = families(pairs);
    CHECK(fam.size() == 5);
    CHECK(fam.at("whole-vs-empty") == std::set<std::uint64_t>{0});
    CHECK(fam.at("single-line-star") == std::set<std::uint64_t>{11});
    CHECK(fam.at("point-pencil-EKR") == std::set<std::uint64_t>{9});
    CHECK(fam.at("two-line-transversal") == std::set<std::uint64_t>{10});
    CHECK(fam.at("regulus-triple") == std::set<std::uint64_t>{9});
    CHECK(pairs.front().product() == 11);
    for (const auto& p : pairs) {
        CHECK(p.is_cross(g));
        const auto c = cross_closure(p.Z, g);
        CHECK(c.Y == p.Y);
        CHECK(c.Z == p.Z);
        CHECK(p.Y.count() >= p.Z.count());
    }
}

TEST_CASE("complete sweeps on Q(4,2), W(3,2) and W(3,3)")
{
    for (auto f : {Family::Qparabolic, Family::W}) {
        const auto cat = catalog(f, 2, 2);
        auto pairs = enumerate_maximal_cross_pairs(CrossGraph::from_catalog(cat));
        label_families(cat, pairs);
        std::set<std::string> best;
        for (const auto& p : pairs)
            if (p.product() == 9)
                best.insert(p.family);
        CHECK(pairs.front().product() == 9);
        CHECK(best == std::set<std::string>{"hyperbolic-subgeometry", "point-pencil-EKR"});
    }
    const auto cat = catalog(Family::W, 2, 3);
    auto pairs = enumerate_maximal_cross_pairs(CrossGraph::from_catalog(cat));
    CHECK(pairs.front().product() == 16);
    for (const auto& p : pairs)
        if (p.product() == 16)
            CHECK(p.Y == p.Z);
}

TEST_CASE("sweep limit")
{
    const auto cat = catalog(Family::Hodd, 2, 4);
    CHECK_THROWS_AS(enumerate_maximal_cross_pairs(CrossGraph::from_catalog(cat), 10), Error);
}

TEST_CASE("latins and greeks")
{
    const auto cat = catalog(Family::Qplus, 4, 2);
    const auto g = CrossGraph::from_catalog(cat);
    const auto [x1, x2] = bipartition_latins_greeks(cat);
    CHECK(x1.count() == 135);
    CHECK(x2.count() == 135);
    CHECK(CrossPair{x1, x2, false, ""}.is_cross(g));
    CHECK_FALSE(CrossPair{x1, x1, false, ""}.is_cross(g));

    const auto odd = catalog(Family::Qplus, 3, 2);
    const auto [y1, y2] = bipartition_latins_greeks(odd);
    CHECK_FALSE(CrossPair{y1, y2, false, ""}.is_cross(CrossGraph::from_catalog(odd)));
    CHECK(CrossPair{y1, y1, false, ""}.is_cross(CrossGraph::from_catalog(odd)));
    CHECK_THROWS(bipartition_latins_greeks(catalog(Family::W, 2, 2)));
}

TEST_CASE("structure of the non-EKR maximum pair on Q(4,2)")
{
    const auto cat = catalog(Family::Qparabolic, 2, 2);
    auto pairs = enumerate_maximal_cross_pairs(CrossGraph::from_catalog(cat));
    label_families(cat, pairs);
    const CrossPair* hyp = nullptr;
    for (const auto& p : pairs)
        if (p.family == "hyperbolic-subgeometry")
            hyp = &p;
    REQUIRE(hyp);
    const auto y = hyp->y_list();
    CHECK(verify_dimension_profile(cat, *hyp, y[0]).ok);
    CHECK(verify_zgh(cat, *hyp, y[0], y[1]).ok);
    CHECK(verify_hyperplane_section(cat, y[0], y[1]).ok);
    CHECK(verify_hyperplane_meets(cat, *hyp).ok);

    // G is disjoint from the rest of its regulus and meets every line of the
    // opposite one.
    std::size_t disjoint = 0, meet_z = 0;
    for (auto v : y)
        disjoint += cat.meet_dim(y[0], v) == 0;
    for (auto v : hyp->z_list())
        meet_z += cat.meet_dim(y[0], v) == 1;
    CHECK(disjoint == 2);
    CHECK(meet_z == 3);

    std::size_t meeting = 1;
    while (cat.meet_dim(0, meeting) == 0)
        ++meeting;
    CHECK_THROWS(verify_hyperplane_section(cat, 0, meeting));
    CHECK_THROWS(verify_zgh(cat, *hyp, y[0], y[0]));
}

TEST_CASE("hyperplane sections of Q(6,2)")
{
    const auto cat = catalog(Family::Qparabolic, 3, 2);
    std::size_t h = 1;
    while (cat.meet_dim(0, h) != 0)
        ++h;
    CHECK(verify_hyperplane_section(cat, 0, h).ok);
}

TEST_CASE("maximality lemma rejects non-maximal pairs")
{
    const auto cat = catalog(Family::Hodd, 2, 4);
    const std::size_t n = cat.size();
    CrossPair p{bits(n, {0}), bits(n, {0}), false, ""};
    CHECK_THROWS(verify_hyperplane_meets(cat, p));
}

TEST_CASE("transversals of disjoint line triples in W(3,q)")
{
    const auto c3 = w3_triple_census(3);
    CHECK(c3.lines == 40);
    CHECK(c3.only_zero_or_two());
    CHECK_FALSE(c3.two_transversal_witness.empty());
    CHECK(verify_w3_triples(3).ok);

    const auto c2 = w3_triple_census(2);
    CHECK_FALSE(c2.only_zero_or_two());
    CHECK(verify_w3_triples(2).ok);
}

TEST_CASE("local counts in H(7,4)")
{
    const auto h = h7_local_sizes(2, 2000);
    CHECK(h.y_size == 5883);
    CHECK(h.z_size == 171);
    CHECK(h.y_poly == 5883);
    CHECK(h.z_poly == 171);
    CHECK(h.quotient_counts_ok);
    CHECK(h.exact.at(3) == 170);
    CHECK(h.exact.at(2) == 5712);
    CHECK(h.samples == 2000);
    CHECK(h.sample_failures == 0);
}
