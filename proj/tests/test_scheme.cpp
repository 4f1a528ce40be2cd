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

#include "scheme.hpp"

#include "extremal.hpp"

#include <doctest.h>

using namespace polarb;
using namespace polarb::scheme;

namespace {

struct Instance {
    geom::GeneratorCatalog cat;
    RelationData rel;
    qcount::EigenData eig;
};

Instance make(Family f, int d, std::uint64_t q)
{
    auto cat = geom::GeneratorCatalog::enumerate(geom::PolarSpace::make(f, d, q));
    auto rel = build_relations(cat);
    return {std::move(cat), std::move(rel), qcount::eigen_data(f, d, q)};
}

} // namespace

TEST_CASE("valencies")
{
    const auto h = make(Family::Hodd, 2, 4);
    CHECK(h.rel.valencies == std::vector<std::size_t>{1, 10, 16});
    const auto q = make(Family::Qparabolic, 2, 2);
    CHECK(q.rel.valencies[2] == 8);
    std::size_t s = 0;
    for (auto v : q.rel.valencies)
        s += v;
    CHECK(s == q.rel.n);
}

TEST_CASE("relation invariants are enforced")
{
    std::vector<std::uint8_t> codim{0, 1, 2, 0};
    CHECK_THROWS_AS(relations_from_codims(2, 2, codim), Error);
    codim = {1, 1, 1, 1};
    CHECK_THROWS_AS(relations_from_codims(1, 2, codim), Error);
    // Path on three vertices: symmetric but not regular.
    codim = {0, 1, 2, 1, 0, 1, 2, 1, 0};
    CHECK_THROWS_AS(relations_from_codims(2, 3, codim), Error);
}

TEST_CASE("intersection numbers")
{
    const auto w = make(Family::W, 2, 3);
    const auto in = check_intersection_numbers(w.rel);
    for (int i = 0; i <= 2; ++i) {
        CHECK(in.at(i, i, 0) == w.rel.valencies[i]);
        for (int k = 0; k <= 2; ++k)
            CHECK(in.at(0, i, k) == (i == k ? 1u : 0u));
    }
}

TEST_CASE("spectrum by annihilating polynomials")
{
    for (auto [f, d, q] : {std::tuple{Family::Qparabolic, 2, 2ull}, {Family::Hodd, 2, 4ull}, {Family::W, 2, 3ull},
                           {Family::Qplus, 3, 2ull}, {Family::Qminus, 2, 2ull}}) {
        const auto x = make(f, d, q);
        const auto r = verify_spectrum(x.rel, x.eig);
        CAPTURE(family_name(f));
        CHECK(r.ok);
        CHECK(r.annihilation_checked.size() == static_cast<std::size_t>(d + 1));
    }
    const auto q = make(Family::Qparabolic, 2, 2);
    std::vector<Integer> col;
    for (int r = 0; r <= 2; ++r)
        col.push_back(q.eig.P[r][1]);
    CHECK(col == std::vector<Integer>{6, 1, -3});
    const auto h = make(Family::Hodd, 2, 4);
    col.clear();
    for (int r = 0; r <= 2; ++r)
        col.push_back(h.eig.P[r][2]);
    CHECK(col == std::vector<Integer>{16, -2, 4});
}

TEST_CASE("a wrong eigenmatrix is detected")
{
    auto h = make(Family::Hodd, 2, 4);
    h.eig.P[1][2] = -3;
    CHECK_FALSE(verify_spectrum(h.rel, h.eig).ok);
}

TEST_CASE("eigenspace supports")
{
    const auto h = make(Family::Hodd, 2, 4);
    std::vector<Rational> ones(h.rel.n, Rational(1));
    CHECK(eigenspace_support(ones, h.rel, h.eig) == std::set<int>{0});

    const auto qp = make(Family::Qplus, 4, 2);
    const auto [x1, x2] = extremal::bipartition_latins_greeks(qp.cat);
    auto v = characteristic_vector(qp.rel.n, x1.indices());
    const auto w = characteristic_vector(qp.rel.n, x2.indices());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] -= w[i];
    CHECK(eigenspace_support(v, qp.rel, qp.eig) == std::set<int>{4});

    const auto q = make(Family::Qparabolic, 2, 2);
    const geom::Subspace pt(q.cat.space().field(), 5, {q.cat.points().point(0)});
    const auto pencil = characteristic_vector(q.rel.n, q.cat.generators_through(pt));
    CHECK(eigenspace_support(pencil, q.rel, q.eig) == std::set<int>{0, 1});
}

TEST_CASE("idempotents of H(3,4)")
{
    const auto h = make(Family::Hodd, 2, 4);
    std::vector<std::vector<std::vector<Rational>>> E;
    for (int j = 0; j <= 2; ++j)
        E.push_back(idempotent(j, h.rel, h.eig));
    const std::size_t n = h.rel.n;
    auto product = [&](int a, int b) {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (E[a][i][k] != 0)
                    for (std::size_t j = 0; j < n; ++j)
                        m[i][j] += E[a][i][k] * E[b][k][j];
        return m;
    };
    CHECK(product(1, 1) == E[1]);
    const std::vector<std::vector<Rational>> zero(n, std::vector<Rational>(n));
    CHECK(product(0, 1) == zero);
    CHECK(product(1, 2) == zero);
    CHECK(product(0, 2) == zero);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
        trace += E[1][i][i];
    CHECK(trace == h.eig.multiplicities[1]);
}
