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

#include <algorithm>

namespace polarb::specbound {

char case_letter(EqualityCase c)
{
    switch (c) {
    case EqualityCase::a:
        return 'a';
    case EqualityCase::b:
        return 'b';
    case EqualityCase::c:
        return 'c';
    }
    return '?';
}

BoundReport hoffman_cross_bound(const std::vector<IndexedEigenvalue>& eigs, const Rational& n)
{
    if (eigs.size() < 2)
        fail(ErrorCode::invalid_argument, "the cross bound needs at least two eigenvalues");
    auto j = std::find_if(eigs.begin(), eigs.end(), [](const IndexedEigenvalue& e) { return e.index == 0; });
    if (j == eigs.end())
        fail(ErrorCode::invalid_argument, "no eigenvalue for the all-ones eigenspace (index 0)");

    BoundReport r;
    r.n = n;
    r.k = j->value;
    bool first = true;
    for (const auto& e : eigs) {
        if (e.index == 0)
            continue;
        if (first || e.value > r.lambda_plus)
            r.lambda_plus = e.value;
        first = false;
    }
    r.lambda_minus = eigs.front().value;
    for (const auto& e : eigs)
        r.lambda_minus = std::min(r.lambda_minus, e.value);
    r.degenerate = r.lambda_plus == r.k;
    for (const auto& e : eigs) {
        if (e.index != 0 && e.value == r.lambda_plus)
            r.plus_indices.push_back(e.index);
        if (e.value == r.lambda_minus)
            r.minus_indices.push_back(e.index);
    }
    const Rational neg_minus = -r.lambda_minus;
    r.lambda_b = std::max(neg_minus, r.lambda_plus);
    if (r.k + r.lambda_b == 0)
        fail(ErrorCode::invalid_argument, "k + lambda_b vanishes; the bound is undefined");
    r.bound = r.lambda_b * n / (r.k + r.lambda_b);

    if (r.lambda_plus == r.lambda_b && r.lambda_b == neg_minus)
        r.equality_case = EqualityCase::c;
    else if (r.lambda_plus == r.lambda_b)
        r.equality_case = EqualityCase::a;
    else
        r.equality_case = EqualityCase::b;

    r.predicted_support.insert(0);
    if (r.equality_case != EqualityCase::b)
        r.predicted_support.insert(r.plus_indices.begin(), r.plus_indices.end());
    if (r.equality_case != EqualityCase::a)
        r.predicted_support.insert(r.minus_indices.begin(), r.minus_indices.end());
    return r;
}

BoundReport classical_bound(Family f, int d, std::uint64_t q)
{
    check_parameters(f, d, q);
    std::vector<IndexedEigenvalue> eigs;
    for (int r = 0; r <= d; ++r)
        eigs.push_back({r, Rational(qcount::disjointness_eigenvalue(d, twice_type(f), q, r).value())});
    auto rep = hoffman_cross_bound(eigs, Rational(qcount::num_generators(f, d, q)));
    rep.space = std::string(family_name(f)) + "(d=" + std::to_string(d) + ", q=" + std::to_string(q) + ")";
    return rep;
}

std::set<int> family_support_prediction(Family f, int d, std::uint64_t q)
{
    switch (f) {
    case Family::Qplus:
        return {0, d};
    case Family::Qparabolic:
    case Family::W:
        return {0, 1, d};
    case Family::Heven:
    case Family::Qminus:
        return {0, 1};
    case Family::Hodd:
        break;
    }
    return classical_bound(f, d, q).predicted_support;
}

namespace {

std::uint64_t checked_square(std::uint64_t q)
{
    if (q > (1u << 16))
        fail(ErrorCode::invalid_argument, "q too large");
    return q * q;
}

} // namespace

HermitianParams hermitian_params(int d, std::uint64_t q)
{
    if (d <= 1)
        fail(ErrorCode::invalid_argument, "the Hermitian weighted bound needs d > 1");
    if (!prime_power(q))
        fail(ErrorCode::invalid_argument, "q = " + std::to_string(q) + " is not a prime power");
    HermitianParams h;
    h.d = d;
    h.q = q;
    const std::uint64_t q2 = checked_square(q);
    h.n = Rational(qcount::num_generators(Family::Hodd, d, q2));
    h.f1 = Rational(ipow(q, 2) * qcount::gaussian(d, 1, q2) * (ipow(q, static_cast<unsigned>(2 * d - 3)) + 1))
           / Rational(q + 1);
    h.c = (Rational(ipow(q, 2)) - q - 1 + rpow(q, -2L * d + 3)) / Rational(ipow(q, static_cast<unsigned>(2 * d)) - 1);
    const Rational top = rpow(q, static_cast<long>(d) * (d - 1));
    const Rational sq = rpow(q, static_cast<long>(d - 1) * (d - 1));
    if (d % 2 != 0)
        h.alpha = top + sq;
    else
        h.alpha = (h.n * top - h.n * sq) / (h.n + (2 * h.c - 2) * h.f1);

    const Rational shift = h.alpha * h.f1 * (1 - h.c) / h.n;
    h.k = rpow(q, static_cast<long>(d) * d) + h.alpha * h.f1 * (h.c + (1 - h.c) / h.n);
    h.lambda_b = -sq - h.alpha * (1 - h.f1 * (1 - h.c) / h.n);

    h.eigenvalues.push_back(h.k);
    h.eigenvalues.push_back(h.lambda_b);
    for (int r = 2; r <= d; ++r) {
        Rational v = rpow(q, static_cast<long>(d - r) * (d - r) + static_cast<long>(r) * (r - 1));
        if (r % 2 != 0)
            v = -v;
        h.eigenvalues.push_back(v + shift);
    }
    Rational best = 0;
    for (int r = 1; r <= d; ++r)
        best = std::max(best, boost::multiprecision::abs(h.eigenvalues[r]));
    h.lambda_b_second_largest = boost::multiprecision::abs(h.lambda_b) == best;
    return h;
}

WeightedMatrixSpec hermitian_weighted_matrix(const HermitianParams& params, const qcount::EigenData& eig)
{
    const int d = params.d;
    if (eig.d != d || Rational(eig.n) != params.n)
        fail(ErrorCode::invalid_argument, "eigen data does not belong to the Hermitian parameters");
    WeightedMatrixSpec w;
    w.coeff_disjoint = 1;
    w.coeff_e1 = -params.alpha;
    w.coeff_j = params.alpha * params.f1 * params.c / params.n;
    w.coeff_i = params.alpha * params.f1 * (1 - params.c) / params.n;
    for (int i = 0; i <= d; ++i) {
        Rational v = (i == d ? Rational(1) : Rational(0)) + w.coeff_e1 * eig.Q[i][1] / params.n + w.coeff_j;
        if (i == 0)
            v += w.coeff_i;
        w.weights.push_back(v);
    }
    for (int r = 0; r <= d; ++r) {
        Rational s = 0;
        for (int i = 0; i <= d; ++i)
            s += w.weights[i] * Rational(eig.P[r][i]);
        w.eigenvalues.push_back(s);
    }
    w.k = 0;
    for (int i = 0; i <= d; ++i)
        w.k += Rational(eig.valencies[i]) * w.weights[i];

    if (w.weights[0] != 0)
        w.violations.push_back("diagonal weight w_0 = " + to_string(w.weights[0]) + " is not zero");
    for (int i = 1; i < d; ++i)
        if (w.weights[i] > 0)
            w.violations.push_back("weight w_" + std::to_string(i) + " = " + to_string(w.weights[i])
                                   + " is positive on non-adjacent pairs");
    if (std::all_of(w.weights.begin(), w.weights.end(), [](const Rational& x) { return x == 0; }))
        w.violations.push_back("matrix is identically zero");
    w.extended_weight = w.violations.empty();
    return w;
}

HermitianCrossBound hermitian_cross_bound(int d, std::uint64_t q)
{
    HermitianCrossBound out;
    out.params = hermitian_params(d, q);
    const std::uint64_t q2 = checked_square(q);
    const auto eig = qcount::eigen_data(Family::Hodd, d, q2);
    out.matrix = hermitian_weighted_matrix(out.params, eig);
    const Rational lb = boost::multiprecision::abs(out.params.lambda_b);
    if (out.params.k + lb != 0)
        out.value = out.params.n * lb / (out.params.k + lb);
    out.conditionally_valid = out.matrix.extended_weight && out.params.k > 0 && out.value.has_value();
    out.plain = classical_bound(Family::Hodd, d, q2);
    return out;
}

Rational hermitian_ekr_bound(int d, std::uint64_t q)
{
    if (d <= 1 || d % 2 == 0)
        fail(ErrorCode::invalid_argument, "the Hermitian EKR bound needs odd d > 1");
    const auto h = hermitian_params(d, q);
    const Rational qd1 = rpow(q, d - 1);
    const Rational num = h.n * qd1 - h.f1 * (qd1 - 1) * (1 - h.c);
    const Rational den = rpow(q, 2L * d - 1) + qd1 + h.f1 * (qd1 - 1) * h.c;
    return num / den;
}

} // namespace polarb::specbound
