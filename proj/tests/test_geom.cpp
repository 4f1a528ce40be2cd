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

#include "geom.hpp"

#include <doctest.h>

#include <random>

using namespace polarb;
using namespace polarb::geom;

namespace {

GeneratorCatalog catalog(Family f, int d, std::uint64_t q)
{
    return GeneratorCatalog::enumerate(PolarSpace::make(f, d, q));
}

} // namespace

TEST_CASE("standard spaces are non-degenerate with the right type")
{
    const auto w = PolarSpace::make(Family::W, 2, 3);
    CHECK(w.ambient() == 4);
    CHECK(w.kind() == FormKind::alternating);
    CHECK(rank(w.field(), w.gram()) == 4);
    const auto qp = PolarSpace::make(Family::Qplus, 4, 2);
    CHECK(qp.ambient() == 8);
    CHECK(qp.tau() == 0);
    const auto h = PolarSpace::make(Family::Hodd, 2, 4);
    CHECK(h.kind() == FormKind::hermitian);
    CHECK(h.tau() == 1);
    CHECK_THROWS(PolarSpace::make(Family::Hodd, 2, 8));
}

TEST_CASE("degenerate forms are rejected")
{
    auto F = std::make_shared<const ff::Field>(3, 1);
    Matrix gram{{0, 1, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    CHECK_THROWS(PolarSpace::from_form(Family::W, 2, F, FormKind::alternating, gram, {}));
}

TEST_CASE("singularity and total isotropy")
{
    const auto w = PolarSpace::make(Family::W, 2, 3);
    const PointSet pts(w);
    CHECK(pts.size() == 40);
    CHECK(w.is_totally_isotropic(Subspace::zero(4)));
    // Characteristic 2: the parabolic form decides singularity, not its polarization.
    const auto q = PolarSpace::make(Family::Qparabolic, 2, 2);
    CHECK_FALSE(q.is_singular(Vec{1, 0, 0, 0, 0}));
    CHECK(q.form(Vec{1, 0, 0, 0, 0}, Vec{1, 0, 0, 0, 0}) == 0);
    CHECK(PointSet(q).size() == 15);
}

TEST_CASE("perp")
{
    const auto w = PolarSpace::make(Family::W, 2, 3);
    const auto& F = w.field();
    CHECK(w.perp(Subspace::zero(4)).dim() == 4);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> e(0, 2), k(1, 3);
    for (int t = 0; t < 100; ++t) {
        Matrix rows(k(rng), Vec(4));
        for (auto& r : rows)
            for (auto& x : r)
                x = static_cast<Elem>(e(rng));
        const Subspace S(F, 4, rows);
        const Subspace P = w.perp(S);
        CHECK(P.dim() == 4 - S.dim());
        CHECK(w.perp(P) == S);
    }
}

TEST_CASE("perp of a point of G meets a disjoint generator in a point")
{
    const auto cat = catalog(Family::Qparabolic, 2, 2);
    const auto& ps = cat.space();
    std::size_t h = 1;
    while (cat.meet_dim(0, h) != 0)
        ++h;
    for (const auto& v : points_of(ps.field(), cat.at(0))) {
        const Subspace pt(ps.field(), ps.ambient(), {v});
        CHECK(intersect(ps.field(), ps.perp(pt), cat.at(h)).dim() == 1);
    }
}

TEST_CASE("generator counts and canonical order")
{
    for (auto [f, d, q] : {std::tuple{Family::Qplus, 4, 2ull}, {Family::Hodd, 2, 4ull}, {Family::W, 2, 3ull},
                           {Family::Qminus, 2, 2ull}, {Family::Heven, 2, 4ull}, {Family::Qparabolic, 2, 3ull}}) {
        const auto cat = catalog(f, d, q);
        CAPTURE(family_name(f));
        CHECK(Integer(cat.size()) == qcount::num_generators(f, d, q));
        CHECK(Integer(cat.points().size()) == qcount::num_points(f, d, q));
        for (std::size_t i = 0; i < cat.size(); ++i) {
            CHECK(cat.at(i).dim() == d);
            CHECK(cat.space().is_totally_isotropic(cat.at(i)));
            if (i > 0)
                CHECK(cat.at(i - 1).key() < cat.at(i).key());
        }
    }
}

TEST_CASE("enumeration is deterministic")
{
    const auto a = catalog(Family::W, 2, 3);
    const auto b = catalog(Family::W, 2, 3);
    CHECK(a.generators() == b.generators());
}

TEST_CASE("limit exceeded")
{
    CHECK_THROWS_AS(GeneratorCatalog::enumerate(PolarSpace::make(Family::Qplus, 4, 2), 100), Error);
}

TEST_CASE("codimensions")
{
    const auto h = catalog(Family::Hodd, 2, 4);
    for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK(h.codim_intersection(i, i) == 0);
        std::size_t far = 0;
        for (std::size_t j = 0; j < h.size(); ++j) {
            CHECK(h.codim_intersection(i, j) == h.codim_fast(i, j));
            far += h.codim_fast(i, j) == 2;
        }
        CHECK(far == 16);
    }
}

TEST_CASE("next-to-maximal subspaces lie on q^e + 1 generators")
{
    for (auto [f, d, q, on] : {std::tuple{Family::W, 2, 2ull, 3u}, {Family::Hodd, 2, 4ull, 3u},
                               {Family::Qplus, 3, 2ull, 2u}, {Family::Qminus, 2, 2ull, 5u}, {Family::W, 3, 2ull, 3u}}) {
        const auto cat = catalog(f, d, q);
        const auto& F = cat.space().field();
        for (std::size_t g = 0; g < cat.size(); ++g)
            for (const auto& c : all_subspaces(F, d, d - 1)) {
                Matrix rows;
                for (const auto& coeffs : c.basis()) {
                    Vec v(cat.space().ambient(), 0);
                    for (int k = 0; k < d; ++k)
                        for (int x = 0; x < cat.space().ambient(); ++x)
                            v[x] = F.add(v[x], F.mul(coeffs[k], cat.at(g).basis()[k][x]));
                    rows.push_back(v);
                }
                CHECK(cat.generators_through(Subspace(F, cat.space().ambient(), rows)).size() == on);
            }
        CHECK(cat.generators_through(cat.at(0)) == std::vector<std::size_t>{0});
    }
}

TEST_CASE("quotients")
{
    const auto ps = PolarSpace::make(Family::W, 3, 2);
    const auto cat = GeneratorCatalog::enumerate(ps);
    const auto& F = ps.field();
    const auto& g = cat.at(5);
    const Subspace L(F, ps.ambient(), {g.basis()[0], g.basis()[1]});
    const Quotient quo(ps, L);
    CHECK(quo.space().rank() == 1);
    CHECK(quo.space().family() == Family::W);
    const auto img = quo.image(g);
    CHECK(img.dim() == 1);
    CHECK(quo.space().is_totally_isotropic(img));
    CHECK(quo.lift(img) == g);
    CHECK(quotient_map(ps, g, g).dim() == 0);

    // Lifts of quotient generators are the generators through M; images of
    // arbitrary generators stay within the quotient rank.
    const Subspace M(F, ps.ambient(), {g.basis()[0]});
    const Quotient qm(ps, M);
    const auto sub = GeneratorCatalog::enumerate(qm.space());
    CHECK(sub.size() == 15);
    for (const auto& s : sub.generators()) {
        const auto lifted = qm.lift(s);
        CHECK(cat.find(lifted) < cat.size());
        CHECK(lifted.contains(F, M));
    }
    for (const auto& h : cat.generators())
        CHECK(quotient_map(ps, M, h).dim() <= 2);
}

TEST_CASE("rank-one Hermitian quotient has q + 1 points")
{
    const auto ps = PolarSpace::make(Family::Hodd, 2, 4);
    const auto g = find_generator(ps);
    const Subspace pt(ps.field(), ps.ambient(), {g.basis()[0]});
    const Quotient quo(ps, pt);
    CHECK(GeneratorCatalog::enumerate(quo.space()).size() == 3);
}
