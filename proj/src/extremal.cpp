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

#include "qcount.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace polarb::extremal {

using geom::GeneratorCatalog;
using geom::Matrix;
using geom::Subspace;

// ---------------------------------------------------------------------------
// Graph and closure

CrossGraph CrossGraph::from_adjacency(std::vector<Bitset> adjacency)
{
    CrossGraph g;
    const std::size_t n = adjacency.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (adjacency[v].size() != n || adjacency[v].test(v))
            fail(ErrorCode::invalid_argument, "adjacency row " + std::to_string(v) + " is malformed");
        for (std::size_t w = adjacency[v].first(); w < n; w = adjacency[v].next(w))
            if (!adjacency[w].test(v))
                fail(ErrorCode::invalid_argument, "adjacency is not symmetric");
    }
    g.adj_ = std::move(adjacency);
    for (const auto& row : g.adj_)
        g.non_.push_back(row.complement());
    return g;
}

CrossGraph CrossGraph::from_catalog(const GeneratorCatalog& cat)
{
    const std::size_t n = cat.size();
    std::vector<Bitset> adj(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (and_count(cat.generator_points(i), cat.generator_points(j)) == 0) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return from_adjacency(std::move(adj));
}

Bitset CrossGraph::common_non_neighbours(const Bitset& s) const
{
    Bitset out = Bitset::full(size());
    for (std::size_t v = s.first(); v < s.size(); v = s.next(v))
        out &= non_[v];
    return out;
}

bool CrossPair::is_cross(const CrossGraph& g) const
{
    for (std::size_t y = Y.first(); y < Y.size(); y = Y.next(y))
        if (and_count(g.adjacency(y), Z) != 0)
            return false;
    return true;
}

CrossPair cross_closure(const Bitset& Z, const CrossGraph& g)
{
    CrossPair p;
    p.Y = g.common_non_neighbours(Z);
    p.Z = g.common_non_neighbours(p.Y);
    p.maximal = g.common_non_neighbours(p.Z) == p.Y;
    return p;
}

namespace {

void orient(CrossPair& p)
{
    const auto ny = p.Y.count(), nz = p.Z.count();
    if (nz > ny || (nz == ny && p.Z < p.Y))
        std::swap(p.Y, p.Z);
}

} // namespace

std::vector<CrossPair> enumerate_maximal_cross_pairs(const CrossGraph& g, unsigned limit)
{
    const std::size_t n = g.size();
    for (std::size_t y = 0; y < n; ++y)
        if (g.non_neighbours(y).count() > limit)
            fail(ErrorCode::limit_exceeded,
                 "vertex " + std::to_string(y) + " has " + std::to_string(g.non_neighbours(y).count())
                     + " non-neighbours, above the sweep limit of " + std::to_string(limit)
                     + "; use targeted verification or a seeded partial search instead");

    std::set<std::pair<Bitset, Bitset>> seen;
    auto record = [&](CrossPair p) {
        orient(p);
        seen.emplace(std::move(p.Y), std::move(p.Z));
    };
    record(cross_closure(Bitset(n), g));

    // Every maximal pair with y in Y has Z inside nonN(y); walk all subsets
    // of nonN(y) depth-first, carrying nonN of the chosen part.
    for (std::size_t y = 0; y < n; ++y) {
        const auto cand = g.non_neighbours(y).indices();
        Bitset chosen(n);
        auto walk = [&](auto&& self, std::size_t pos, const Bitset& ys) -> void {
            if (pos == cand.size()) {
                if (chosen.none())
                    return;
                CrossPair p;
                p.Y = ys;
                p.Z = g.common_non_neighbours(ys);
                record(std::move(p));
                return;
            }
            self(self, pos + 1, ys);
            chosen.set(cand[pos]);
            self(self, pos + 1, ys & g.non_neighbours(cand[pos]));
            chosen.reset(cand[pos]);
        };
        walk(walk, 0, Bitset::full(n));
    }

    std::vector<CrossPair> out;
    for (const auto& [Y, Z] : seen) {
        CrossPair p;
        p.Y = Y;
        p.Z = Z;
        p.maximal = g.common_non_neighbours(Z) == Y && g.common_non_neighbours(Y) == Z;
        if (!p.maximal || !p.is_cross(g))
            fail(ErrorCode::internal, "sweep produced a pair that is not a maximal cross pair");
        out.push_back(std::move(p));
    }
    std::stable_sort(out.begin(), out.end(), [](const CrossPair& a, const CrossPair& b) {
        if (a.product() != b.product())
            return a.product() > b.product();
        return a.Y.count() > b.Y.count();
    });
    return out;
}

// ---------------------------------------------------------------------------
// Labels

namespace {

bool pairwise_disjoint(const GeneratorCatalog& cat, const std::vector<std::size_t>& s)
{
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (cat.meet_dim(s[a], s[b]) != 0)
                return false;
    return true;
}

bool common_point(const GeneratorCatalog& cat, const std::vector<std::size_t>& s)
{
    Bitset acc = Bitset::full(cat.points().size());
    for (auto v : s)
        acc &= cat.generator_points(v);
    return !acc.none();
}

// Both sides are halves of a hyperbolic quadric of the same rank: equal
// size n(Q+)/2, even codimension inside each side, odd across.
bool hyperbolic_halves(const GeneratorCatalog& cat, const std::vector<std::size_t>& y,
                       const std::vector<std::size_t>& z)
{
    const auto& ps = cat.space();
    const int d = ps.rank();
    if (d % 2 != 0)
        return false;
    const Integer half = qcount::num_generators(Family::Qplus, d, ps.q()) / 2;
    if (Integer(y.size()) != half || Integer(z.size()) != half)
        return false;
    auto parity_ok = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, int want) {
        for (auto i : a)
            for (auto j : b)
                if (i != j && (d - cat.meet_dim(i, j)) % 2 != want)
                    return false;
        return true;
    };
    if (!parity_ok(y, y, 0) || !parity_ok(z, z, 0) || !parity_ok(y, z, 1))
        return false;
    if (ps.family() == Family::Qparabolic) {
        const Subspace S = geom::span(ps.field(), cat.at(y[0]), cat.at(y[1 % y.size()]));
        for (auto v : y)
            if (!S.contains(ps.field(), cat.at(v)))
                return false;
        for (auto v : z)
            if (!S.contains(ps.field(), cat.at(v)))
                return false;
    }
    return true;
}

} // namespace

std::string family_label(const GeneratorCatalog& cat, const CrossPair& pair)
{
    const auto y = pair.y_list();
    const auto z = pair.z_list();
    if (z.empty() || y.empty())
        return "whole-vs-empty";
    if (pair.Y == pair.Z)
        return common_point(cat, y) ? "point-pencil-EKR" : "other";
    if (cat.space().family() == Family::Qplus && cat.space().rank() % 2 == 0) {
        const auto [x1, x2] = bipartition_latins_greeks(cat);
        if ((pair.Y == x1 && pair.Z == x2) || (pair.Y == x2 && pair.Z == x1))
            return "latins-greeks";
    }
    if (hyperbolic_halves(cat, y, z))
        return "hyperbolic-subgeometry";
    if (z.size() == 1)
        return "single-line-star";
    if (z.size() == 2 && pairwise_disjoint(cat, z))
        return "two-line-transversal";
    if ((pair.Y & pair.Z).none() && y.size() >= 3 && z.size() >= 3 && pairwise_disjoint(cat, y)
        && pairwise_disjoint(cat, z))
        return "regulus-triple";
    return "other";
}

void label_families(const GeneratorCatalog& cat, std::vector<CrossPair>& pairs)
{
    for (auto& p : pairs)
        p.family = family_label(cat, p);
}

// ---------------------------------------------------------------------------
// Hyperbolic bipartition

std::pair<Bitset, Bitset> bipartition_latins_greeks(const GeneratorCatalog& cat)
{
    const auto& ps = cat.space();
    if (ps.family() != Family::Qplus)
        fail(ErrorCode::invalid_argument, "latins/greeks need a hyperbolic quadric, got " + ps.describe());
    const std::size_t n = cat.size();
    const int d = ps.rank();
    Bitset x1(n), x2(n);
    for (std::size_t i = 0; i < n; ++i)
        ((d - cat.meet_dim(0, i)) % 2 == 0 ? x1 : x2).set(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool same = x1.test(i) == x1.test(j);
            if (((d - cat.meet_dim(i, j)) % 2 == 0) != same)
                fail(ErrorCode::verification, "codimension parity is not an equivalence on generators "
                                                  + std::to_string(i) + ", " + std::to_string(j));
        }
    if (x1.count() != x2.count())
        fail(ErrorCode::verification, "parity classes have different sizes");
    return {x1, x2};
}

// ---------------------------------------------------------------------------
// Structure of maximum pairs with Y != Z

Report verify_dimension_profile(const GeneratorCatalog& cat, const CrossPair& pair, std::size_t G)
{
    const auto& ps = cat.space();
    const int d = ps.rank();
    const auto q = ps.q();
    Report r;
    if (!pair.Y.test(G))
        fail(ErrorCode::invalid_argument, "G is not a member of Y");
    r.check((pair.Y & pair.Z).none(), "Y and Z are disjoint");
    std::vector<std::size_t> in_y(d + 1, 0), in_z(d + 1, 0);
    for (std::size_t v = 0; v < cat.size(); ++v) {
        const int s = cat.meet_dim(G, v);
        if (pair.Y.test(v))
            ++in_y[s];
        if (pair.Z.test(v))
            ++in_z[s];
    }
    for (int s = 0; s <= d; ++s) {
        const Integer full = qcount::gaussian(d, s, q) * ipow(q, static_cast<unsigned>(binom2(d - s)));
        const bool even = (d - s) % 2 == 0;
        const Integer want_y = even ? full : Integer(0);
        const Integer want_z = even ? Integer(0) : full;
        r.check(Integer(in_y[s]) == want_y, "s=" + std::to_string(s) + ": G meets " + std::to_string(in_y[s])
                                                + " members of Y, expected " + want_y.str());
        r.check(Integer(in_z[s]) == want_z, "s=" + std::to_string(s) + ": G meets " + std::to_string(in_z[s])
                                                + " members of Z, expected " + want_z.str());
    }
    return r;
}

Report verify_zgh(const GeneratorCatalog& cat, const CrossPair& pair, std::size_t G, std::size_t H)
{
    const auto& ps = cat.space();
    const auto& F = ps.field();
    const int d = ps.rank();
    if (!pair.Y.test(G) || !pair.Y.test(H) || cat.meet_dim(G, H) != 0)
        fail(ErrorCode::invalid_argument, "G and H must be disjoint members of Y");
    Report r;

    std::set<std::size_t> meeting;
    for (std::size_t v = pair.Z.first(); v < cat.size(); v = pair.Z.next(v))
        if (cat.meet_dim(G, v) == d - 1)
            meeting.insert(v);
    const Integer hyperplanes = qcount::gaussian(d, d - 1, ps.q());
    r.check(Integer(meeting.size()) == hyperplanes,
            std::to_string(meeting.size()) + " members of Z meet G in a hyperplane, expected " + hyperplanes.str());

    std::set<std::size_t> built;
    std::vector<std::size_t> order;
    const Matrix& gb = cat.at(G).basis();
    for (const auto& c : geom::all_subspaces(F, d, d - 1)) {
        Matrix rows;
        for (const auto& coeffs : c.basis()) {
            geom::Vec v(ps.ambient(), 0);
            for (int k = 0; k < d; ++k)
                for (int x = 0; x < ps.ambient(); ++x)
                    v[x] = F.add(v[x], F.mul(coeffs[k], gb[k][x]));
            rows.push_back(v);
        }
        const Subspace pi(F, ps.ambient(), rows);
        const Subspace trace = geom::intersect(F, ps.perp(pi), cat.at(H));
        r.check(trace.dim() == 1, "perp of a hyperplane of G meets H in dimension " + std::to_string(trace.dim()));
        const Subspace z = geom::span(F, pi, trace);
        const std::size_t idx = cat.find(z);
        if (!r.check(idx < cat.size(), "span of hyperplane and its trace on H is a generator"))
            continue;
        built.insert(idx);
        order.push_back(idx);
    }
    r.check(built == meeting, "constructed set equals the members of Z meeting G in a hyperplane");
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            if (order[a] != order[b])
                r.check(cat.meet_dim(order[a], order[b]) < d - 1,
                        "constructed generators " + std::to_string(order[a]) + ", " + std::to_string(order[b])
                            + " meet below a hyperplane");
    return r;
}

Report verify_hyperplane_section(const GeneratorCatalog& cat, std::size_t G, std::size_t H)
{
    const auto& ps = cat.space();
    if (ps.family() != Family::Qparabolic)
        fail(ErrorCode::invalid_argument, "hyperplane sections are checked on parabolic quadrics only");
    if (cat.meet_dim(G, H) != 0)
        fail(ErrorCode::invalid_argument, "G and H must be disjoint");
    const int d = ps.rank();
    const auto& F = ps.field();
    Report r;
    const Subspace S = geom::span(F, cat.at(G), cat.at(H));
    r.check(S.dim() == 2 * d, "span of G and H has dimension " + std::to_string(S.dim()));

    const auto section = ps.restrict_to(S.basis(), Family::Qplus, d);
    const geom::PointSet pts(section);
    const Integer want_points = qcount::num_points(Family::Qplus, d, ps.q());
    r.check(Integer(pts.size()) == want_points, "section has " + std::to_string(pts.size())
                                                    + " singular points, hyperbolic count " + want_points.str());
    const Integer want_gens = qcount::num_generators(Family::Qplus, d, ps.q());
    std::size_t inside = 0;
    for (const auto& g : cat.generators())
        if (S.contains(F, g))
            ++inside;
    r.check(Integer(inside) == want_gens, "section contains " + std::to_string(inside)
                                              + " generators, hyperbolic count " + want_gens.str());
    try {
        const auto sub = GeneratorCatalog::enumerate(section);
        r.check(Integer(sub.size()) == want_gens, "enumeration of the section gives " + std::to_string(sub.size())
                                                      + " generators");
    } catch (const Error& e) {
        r.check(false, std::string("enumeration of the section failed: ") + e.what());
    }
    return r;
}

// ---------------------------------------------------------------------------
// Transversals in W(3, q)

bool TripleCensus::only_zero_or_two() const
{
    for (const auto& [count, num] : histogram)
        if (num != 0 && count != 0 && count != 2)
            return false;
    return true;
}

TripleCensus w3_triple_census(std::uint64_t q)
{
    const auto ps = geom::PolarSpace::make(Family::W, 2, q);
    const auto cat = GeneratorCatalog::enumerate(ps);
    const auto g = CrossGraph::from_catalog(cat);
    TripleCensus c;
    c.q = q;
    c.lines = cat.size();
    const std::size_t n = cat.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = g.adjacency(a).next(a); b < n; b = g.adjacency(a).next(b)) {
            const Bitset ab = g.adjacency(a) & g.adjacency(b);
            const Bitset meet_ab = g.non_neighbours(a) & g.non_neighbours(b);
            for (std::size_t e = ab.next(b); e < n; e = ab.next(e)) {
                const std::size_t t = and_count(meet_ab, g.non_neighbours(e));
                ++c.triples;
                ++c.histogram[t];
                if (t == 2 && c.two_transversal_witness.empty())
                    c.two_transversal_witness = {a, b, e};
            }
        }
    return c;
}

Report verify_w3_triples(std::uint64_t q)
{
    const auto c = w3_triple_census(q);
    Report r;
    for (const auto& [count, num] : c.histogram)
        r.note(std::to_string(num) + " triples with " + std::to_string(count) + " common transversals");
    if (q % 2 == 1) {
        r.check(c.triples > 0, std::to_string(c.triples) + " triples of pairwise disjoint lines examined");
        r.check(c.only_zero_or_two(), "every triple has 0 or 2 common transversals");
        r.check(!c.two_transversal_witness.empty(), "some triple has exactly 2 common transversals");
    } else {
        r.note("q even: counts reported only");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Maximal pairs

Report verify_hyperplane_meets(const GeneratorCatalog& cat, const CrossPair& pair)
{
    const auto g = CrossGraph::from_catalog(cat);
    if (!pair.is_cross(g) || g.common_non_neighbours(pair.Z) != pair.Y || g.common_non_neighbours(pair.Y) != pair.Z)
        fail(ErrorCode::invalid_argument, "pair is not a maximal cross pair");
    const int d = cat.space().rank();
    Report r;
    std::size_t checked = 0;
    auto side = [&](const Bitset& A, const Bitset& B, const char* name) {
        const auto a = A.indices();
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j) {
                if (cat.meet_dim(a[i], a[j]) != d - 1)
                    continue;
                ++checked;
                const Bitset s = cat.generator_points(a[i]) & cat.generator_points(a[j]);
                for (std::size_t z = B.first(); z < B.size(); z = B.next(z))
                    if (and_count(cat.generator_points(z), s) == 0)
                        r.check(false, std::string("member ") + std::to_string(z) + " misses the meet of "
                                           + name + "-members " + std::to_string(a[i]) + ", " + std::to_string(a[j]));
            }
    };
    side(pair.Y, pair.Z, "Y");
    side(pair.Z, pair.Y, "Z");
    r.check(r.ok, std::to_string(checked) + " hyperplane-meeting pairs checked");
    return r;
}

// ---------------------------------------------------------------------------
// Local counts in H(7, q^2)

LocalSizes h7_local_sizes(std::uint64_t q, std::size_t samples, std::uint64_t seed)
{
    const int d = 4;
    const std::uint64_t q2 = q * q;
    const auto ps = geom::PolarSpace::make(Family::Hodd, d, q2);
    const auto& F = ps.field();
    const Subspace G = geom::find_generator(ps);

    LocalSizes out;
    out.q = q;
    out.d = d;
    std::map<int, std::vector<Subspace>> lifted; // generators through each s-space, with repetition

    for (int s = 2; s < d; ++s) {
        Integer total = 0;
        const Integer per = qcount::num_generators(Family::Hodd, d - s, q2);
        for (const auto& c : geom::all_subspaces(F, d, s)) {
            Matrix rows;
            for (const auto& coeffs : c.basis()) {
                geom::Vec v(ps.ambient(), 0);
                for (int k = 0; k < d; ++k)
                    for (int x = 0; x < ps.ambient(); ++x)
                        v[x] = F.add(v[x], F.mul(coeffs[k], G.basis()[k][x]));
                rows.push_back(v);
            }
            const Subspace S(F, ps.ambient(), rows);
            const geom::Quotient quo(ps, S);
            const auto sub = GeneratorCatalog::enumerate(quo.space());
            if (Integer(sub.size()) != per)
                out.quotient_counts_ok = false;
            total += sub.size();
            for (const auto& g : sub.generators())
                lifted[s].push_back(quo.lift(g));
        }
        out.through[s] = total;
    }
    out.through[d] = 1;

    // Inclusion-exclusion over the exact meet dimension t:
    // N_s = sum_{t >= s} c_t [t, s].
    for (int t = d; t >= 2; --t) {
        Integer c = out.through[t];
        for (int u = t + 1; u <= d; ++u)
            c -= out.exact[u] * qcount::gaussian(u, t, q2);
        out.exact[t] = c;
    }
    for (int t = 2; t <= d; ++t) {
        out.y_size += out.exact[t];
        if (t >= 3)
            out.z_size += out.exact[t];
    }
    auto p = [&](unsigned e) { return ipow(q, e); };
    out.y_poly = 1 + p(1) + p(3) + p(4) + p(5) + p(6) + p(7) + 2 * p(8) + p(10) + p(12);
    out.z_poly = 1 + p(1) + p(3) + p(5) + p(7);

    std::mt19937_64 rng(seed);
    const auto& ys = lifted[2];
    const auto& zs = lifted[3];
    std::uniform_int_distribution<std::size_t> pick_y(0, ys.size() - 1), pick_z(0, zs.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const Subspace& y = ys[pick_y(rng)];
        const Subspace& z = zs[pick_z(rng)];
        Matrix rows = y.basis();
        rows.insert(rows.end(), z.basis().begin(), z.basis().end());
        const bool valid = y.dim() == d && z.dim() == d && ps.is_totally_isotropic(y) && ps.is_totally_isotropic(z)
                           && geom::intersect(F, y, G).dim() >= 2 && geom::intersect(F, z, G).dim() >= 3;
        if (!valid || geom::rank(F, rows) >= 2 * d)
            ++out.sample_failures;
        ++out.samples;
    }
    return out;
}

} // namespace polarb::extremal
