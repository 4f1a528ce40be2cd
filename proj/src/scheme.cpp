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

#include <cstdlib>
#include <limits>

namespace polarb::scheme {

RelationData relations_from_codims(int d, std::size_t n, std::vector<std::uint8_t> codim)
{
    RelationData rel;
    rel.d = d;
    rel.n = n;
    rel.codim = std::move(codim);
    if (rel.codim.size() != n * n)
        fail(ErrorCode::format, "codimension table has the wrong size");
    rel.A.assign(static_cast<std::size_t>(d + 1), std::vector<Bitset>(n, Bitset(n)));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const int c = rel.codim[x * n + y];
            if (c > d)
                fail(ErrorCode::verification, "codimension out of range");
            if (c != rel.codim[y * n + x])
                fail(ErrorCode::verification, "relation is not symmetric at (" + std::to_string(x) + ", "
                                                  + std::to_string(y) + ")");
            if ((c == 0) != (x == y))
                fail(ErrorCode::verification, "R_0 is not the identity relation");
            rel.A[c][x].set(y);
        }
    rel.valencies.assign(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d; ++i) {
        const std::size_t k = n ? rel.A[i][0].count() : 0;
        for (std::size_t x = 0; x < n; ++x)
            if (rel.A[i][x].count() != k)
                fail(ErrorCode::verification, "relation R_" + std::to_string(i) + " is not regular");
        rel.valencies[i] = k;
    }
    return rel;
}

RelationData build_relations(const geom::GeneratorCatalog& cat)
{
    const std::size_t n = cat.size();
    std::vector<std::uint8_t> codim(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const auto c = static_cast<std::uint8_t>(cat.codim_fast(x, y));
            codim[x * n + y] = c;
            codim[y * n + x] = c;
        }
    return relations_from_codims(cat.space().rank(), n, std::move(codim));
}

IntersectionNumbers check_intersection_numbers(const RelationData& rel)
{
    const auto m = static_cast<std::size_t>(rel.d + 1);
    IntersectionNumbers out;
    out.d = rel.d;
    out.table.assign(m * m * m, 0);
    std::vector<bool> seen(m * m * m, false);
    for (std::size_t x = 0; x < rel.n; ++x)
        for (std::size_t y = 0; y < rel.n; ++y) {
            const auto k = static_cast<std::size_t>(rel.relation(x, y));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    const std::size_t c = and_count(rel.A[i][x], rel.A[j][y]);
                    const std::size_t slot = (i * m + j) * m + k;
                    if (!seen[slot]) {
                        seen[slot] = true;
                        out.table[slot] = c;
                    } else if (out.table[slot] != c) {
                        fail(ErrorCode::verification, "p^" + std::to_string(k) + "_" + std::to_string(i) + ","
                                                          + std::to_string(j) + " is not constant: pair ("
                                                          + std::to_string(x) + ", " + std::to_string(y) + ") gives "
                                                          + std::to_string(c) + " instead of "
                                                          + std::to_string(out.table[slot]));
                    }
                }
        }
    return out;
}

namespace {

constexpr std::size_t kDenseLimit = 1000;

// prod_r (A - lambda_r I) == 0 with dense int64 rows. Overflow is ruled out
// before every step from the running maximum.
bool annihilated(const RelationData& rel, int i, const std::vector<Integer>& lambdas)
{
    const std::size_t n = rel.n;
    std::vector<std::vector<std::size_t>> nbrs(n);
    for (std::size_t y = 0; y < n; ++y)
        nbrs[y] = rel.A[i][y].indices();
    const auto k = static_cast<std::int64_t>(rel.valencies[i]);

    auto as_i64 = [](const Integer& v) {
        if (boost::multiprecision::abs(v) > Integer(std::numeric_limits<std::int32_t>::max()))
            fail(ErrorCode::limit_exceeded, "eigenvalue too large for the dense check");
        return v.convert_to<std::int64_t>();
    };

    std::vector<std::int64_t> M(n * n, 0);
    const std::int64_t l0 = as_i64(lambdas[0]);
    for (std::size_t x = 0; x < n; ++x) {
        for (auto y : nbrs[x])
            M[x * n + y] = 1;
        M[x * n + x] -= l0;
    }
    std::int64_t maxabs = std::max<std::int64_t>(1, std::abs(l0));
    std::vector<std::int64_t> out(n * n);
    for (std::size_t r = 1; r < lambdas.size(); ++r) {
        const std::int64_t lam = as_i64(lambdas[r]);
        const long double bound = static_cast<long double>(maxabs) * static_cast<long double>(k + std::abs(lam));
        if (bound > static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 4))
            fail(ErrorCode::limit_exceeded, "dense annihilation check would overflow");
        std::fill(out.begin(), out.end(), 0);
        maxabs = 0;
        for (std::size_t x = 0; x < n; ++x) {
            std::int64_t* orow = &out[x * n];
            const std::int64_t* mrow = &M[x * n];
            for (std::size_t y = 0; y < n; ++y) {
                const std::int64_t m = mrow[y];
                if (m == 0)
                    continue;
                for (auto z : nbrs[y])
                    orow[z] += m;
                orow[y] -= lam * m;
            }
            for (std::size_t z = 0; z < n; ++z)
                maxabs = std::max(maxabs, std::abs(orow[z]));
        }
        M.swap(out);
    }
    for (auto v : M)
        if (v != 0)
            return false;
    return true;
}

} // namespace

SpectrumReport verify_spectrum(const RelationData& rel, const qcount::EigenData& eig)
{
    SpectrumReport rep;
    if (eig.d != rel.d || eig.n != Integer(rel.n)) {
        rep.ok = false;
        rep.failures.push_back("eigen data does not match the relation data dimensions");
        return rep;
    }
    const auto m = static_cast<std::size_t>(rel.d + 1);
    for (std::size_t i = 0; i < m; ++i)
        if (Integer(rel.valencies[i]) != eig.P[0][i]) {
            rep.ok = false;
            rep.failures.push_back("valency of R_" + std::to_string(i) + " is " + std::to_string(rel.valencies[i])
                                   + ", P[0][" + std::to_string(i) + "] = " + eig.P[0][i].str());
        }

    // Intersection matrices L_i with (L_i)_{k,j} = p^k_{ij} represent A_i on
    // the Bose-Mesner algebra; they must be annihilated by the same product.
    IntersectionNumbers pn;
    try {
        pn = check_intersection_numbers(rel);
    } catch (const Error& e) {
        rep.ok = false;
        rep.failures.push_back(e.what());
        return rep;
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::vector<Integer>> L(m, std::vector<Integer>(m));
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = 0; j < m; ++j)
                L[k][j] = pn.at(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
        std::vector<std::vector<Integer>> prod(m, std::vector<Integer>(m, 0));
        for (std::size_t a = 0; a < m; ++a)
            prod[a][a] = 1;
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<std::vector<Integer>> next(m, std::vector<Integer>(m, 0));
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    Integer s = 0;
                    for (std::size_t c = 0; c < m; ++c)
                        s += prod[a][c] * (L[c][b] - (c == b ? eig.P[r][i] : Integer(0)));
                    next[a][b] = s;
                }
            prod = std::move(next);
        }
        for (const auto& row : prod)
            for (const auto& v : row)
                if (v != 0) {
                    rep.ok = false;
                    rep.failures.push_back("intersection matrix L_" + std::to_string(i)
                                           + " is not annihilated by the P column");
                    goto next_relation;
                }
    next_relation:;
    }

    if (rel.n <= kDenseLimit) {
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Integer> lambdas;
            for (std::size_t r = 0; r < m; ++r)
                lambdas.push_back(eig.P[r][i]);
            rep.annihilation_checked.push_back(static_cast<int>(i));
            if (!annihilated(rel, static_cast<int>(i), lambdas)) {
                rep.ok = false;
                std::string vals;
                for (const auto& l : lambdas)
                    vals += (vals.empty() ? "" : ", ") + l.str();
                rep.failures.push_back("A_" + std::to_string(i) + " is not annihilated by the eigenvalues {" + vals
                                       + "}");
            }
        }
    }
    return rep;
}

std::vector<Rational> project(const std::vector<Rational>& v, int j, const RelationData& rel,
                              const qcount::EigenData& eig)
{
    if (v.size() != rel.n)
        fail(ErrorCode::invalid_argument, "vector length does not match the number of generators");
    std::vector<Rational> out(rel.n, Rational(0));
    const Rational n(eig.n);
    for (int i = 0; i <= rel.d; ++i) {
        const Rational coeff = eig.Q[i][j] / n;
        if (coeff == 0)
            continue;
        for (std::size_t x = 0; x < rel.n; ++x) {
            Rational s = 0;
            const Bitset& row = rel.A[i][x];
            for (std::size_t y = row.first(); y < row.size(); y = row.next(y))
                if (v[y] != 0)
                    s += v[y];
            if (s != 0)
                out[x] += coeff * s;
        }
    }
    return out;
}

std::set<int> eigenspace_support(const std::vector<Rational>& v, const RelationData& rel,
                                 const qcount::EigenData& eig)
{
    std::set<int> support;
    std::vector<Rational> total(rel.n, Rational(0));
    for (int j = 0; j <= rel.d; ++j) {
        auto p = project(v, j, rel, eig);
        bool nonzero = false;
        for (std::size_t x = 0; x < rel.n; ++x) {
            nonzero = nonzero || p[x] != 0;
            total[x] += p[x];
        }
        if (nonzero)
            support.insert(j);
    }
    if (total != v)
        fail(ErrorCode::verification, "idempotents do not sum to the identity on the vector");
    return support;
}

std::vector<std::vector<Rational>> idempotent(int j, const RelationData& rel, const qcount::EigenData& eig)
{
    std::vector<std::vector<Rational>> E(rel.n, std::vector<Rational>(rel.n));
    const Rational n(eig.n);
    for (std::size_t x = 0; x < rel.n; ++x)
        for (std::size_t y = 0; y < rel.n; ++y)
            E[x][y] = eig.Q[rel.relation(x, y)][j] / n;
    return E;
}

std::vector<Rational> characteristic_vector(std::size_t n, const std::vector<std::size_t>& members)
{
    std::vector<Rational> v(n, Rational(0));
    for (auto m : members)
        v.at(m) = 1;
    return v;
}

} // namespace polarb::scheme
