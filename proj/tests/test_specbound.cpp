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

#include "specbound.hpp"

#include <doctest.h>

using namespace polarb;
using namespace polarb::specbound;

namespace {

std::vector<IndexedEigenvalue> spectrum(std::initializer_list<long> xs)
{
    std::vector<IndexedEigenvalue> out;
    int i = 0;
    for (long x : xs)
        out.push_back({i++, Rational(x)});
    return out;
}

} // namespace

TEST_CASE("cross bound from a spectrum")
{
    const auto qp = hoffman_cross_bound(spectrum({64, -8, 4, -8, 64}), 270);
    CHECK(qp.bound == 135);
    CHECK(qp.degenerate);
    CHECK(qp.lambda_b == 64);
    CHECK(qp.equality_case == EqualityCase::a);

    const auto q = hoffman_cross_bound(spectrum({8, -2, 2}), 15);
    CHECK(q.bound == 3);
    CHECK(q.equality_case == EqualityCase::c);
    CHECK(q.predicted_support == std::set<int>{0, 1, 2});

    const auto h = hoffman_cross_bound(spectrum({16, -2, 4}), 27);
    CHECK(h.bound == Rational(27, 5));
    CHECK(h.equality_case == EqualityCase::a);
    CHECK(h.predicted_support == std::set<int>{0, 2});

    const auto b = hoffman_cross_bound(spectrum({10, 1, -5}), 20);
    CHECK(b.equality_case == EqualityCase::b);
    CHECK(b.predicted_support == std::set<int>{0, 2});

    CHECK_THROWS(hoffman_cross_bound(spectrum({3}), 4));
}

TEST_CASE("classical bounds per family")
{
    for (int d = 1; d <= 4; ++d)
        for (std::uint64_t q : {2, 3}) {
            CHECK(classical_bound(Family::Qplus, d, q).bound == Rational(qcount::num_generators(Family::Qplus, d, q)) / 2);
            for (Family f : {Family::Qparabolic, Family::W, Family::Qminus})
                CHECK(classical_bound(f, d, q).bound == Rational(qcount::generators_on_point(f, d, q)));
        }
    for (int d = 1; d <= 4; ++d)
        CHECK(classical_bound(Family::Heven, d, 4).bound == Rational(qcount::generators_on_point(Family::Heven, d, 4)));
    CHECK(classical_bound(Family::W, 2, 3).bound == 4);
    CHECK(classical_bound(Family::Qplus, 3, 2).bound == 15);
    CHECK(family_support_prediction(Family::Qminus, 2, 2) == std::set<int>{0, 1});
    CHECK(family_support_prediction(Family::Qplus, 4, 2) == std::set<int>{0, 4});
    CHECK(family_support_prediction(Family::W, 2, 3) == std::set<int>{0, 1, 2});
}

TEST_CASE("cross bound with Y = Z is the coclique bound")
{
    // For a k-regular graph the ratio bound is n(-lambda_min)/(k - lambda_min).
    const auto b = classical_bound(Family::Qminus, 2, 2);
    CHECK(b.bound == Rational(45) * (-b.lambda_minus) / (b.k - b.lambda_minus));
}

TEST_CASE("Hermitian parameters")
{
    const auto p = hermitian_params(3, 2);
    CHECK(p.f1 == 252);
    CHECK(p.c == Rational(1, 56));
    CHECK(p.alpha == 80);
    CHECK(p.n == 891);
    CHECK(p.lambda_b_second_largest);
    const auto p2 = hermitian_params(2, 2);
    CHECK(p2.c == Rational(1, 10));
    CHECK(p2.f1 == 20);
    CHECK(p2.alpha < 0);
    CHECK_THROWS(hermitian_params(1, 2));
}

TEST_CASE("Hermitian weighted matrix")
{
    for (int d : {3, 4, 5}) {
        const auto h = hermitian_cross_bound(d, 2);
        const auto& w = h.matrix.weights;
        CAPTURE(d);
        CHECK(w[0] == 0);
        CHECK(w[d - 1] == 0);
        CHECK(w[d] > 0);
        CHECK(h.matrix.extended_weight);
        CHECK(h.matrix.eigenvalues == h.params.eigenvalues);
        CHECK(h.matrix.k == h.params.k);
        CHECK(h.matrix.eigenvalues[0] == h.matrix.k);
    }
    const auto h = hermitian_cross_bound(3, 2);
    REQUIRE(h.value);
    CHECK(*h.value == Rational(747, 11));
    CHECK(*h.value > 32);
    CHECK(*h.value < 96);
    CHECK(h.conditionally_valid);
}

TEST_CASE("Hermitian cross bound degenerates at rank 2")
{
    for (std::uint64_t q : {2, 3}) {
        const auto h = hermitian_cross_bound(2, q);
        CHECK_FALSE(h.value.has_value());
        CHECK_FALSE(h.conditionally_valid);
        for (const auto& w : h.matrix.weights)
            CHECK(w == 0);
    }
    CHECK(hermitian_cross_bound(2, 2).plain.bound == Rational(27, 5));
}

TEST_CASE("Hermitian EKR bound")
{
    CHECK(hermitian_ekr_bound(3, 2) == 57);
    CHECK(hermitian_ekr_bound(3, 2) >= 43);
    CHECK(hermitian_ekr_bound(3, 3) > 0);
    CHECK(hermitian_ekr_bound(5, 2) > 0);
    CHECK_THROWS(hermitian_ekr_bound(4, 2));
}
