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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "extremal.hpp"
#include "geom.hpp"
#include "qcount.hpp"
#include "scheme.hpp"
#include "shell.hpp"
#include "specbound.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

using namespace polarb;

namespace {

using Clock = std::chrono::steady_clock;

struct Instance {
    Family f;
    int d;
    std::uint64_t q;
};

const std::vector<Instance> kInstances{
    {Family::Qplus, 2, 2},      {Family::Qplus, 3, 2}, {Family::Qplus, 4, 2}, {Family::Qparabolic, 2, 2},
    {Family::Qparabolic, 2, 3}, {Family::Qparabolic, 3, 2}, {Family::Qminus, 2, 2}, {Family::W, 2, 2},
    {Family::W, 2, 3},          {Family::W, 3, 2},     {Family::Hodd, 2, 4},  {Family::Hodd, 3, 4},
    {Family::Heven, 2, 4},
};

std::string name(const Instance& x)
{
    return std::string(family_name(x.f)) + "(" + std::to_string(x.d) + "," + std::to_string(x.q) + ")";
}

struct Result {
    bool ok = true;
    std::string info;
    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            info += (info.empty() ? "" : "; ") + what;
        }
    }
};

bool check_passes(const std::string& id, const shell::CheckParams& p, Result& r)
{
    try {
        const auto j = shell::run_check(id, p);
        if (!shell::passed(j)) {
            for (const auto& line : j["details"])
                if (line.get<std::string>().rfind("FAIL", 0) == 0)
                    r.expect(false, id + ": " + line.get<std::string>());
            return false;
        }
        return true;
    } catch (const std::exception& e) {
        r.expect(false, id + ": " + e.what());
        return false;
    }
}

Result generator_counts()
{
    Result r;
    const auto t0 = Clock::now();
    for (const auto& x : kInstances) {
        const auto cat = geom::GeneratorCatalog::enumerate(geom::PolarSpace::make(x.f, x.d, x.q));
        r.expect(Integer(cat.size()) == qcount::num_generators(x.f, x.d, x.q), name(x) + " count");
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    r.expect(s < 120, "over 2 minutes");
    r.info += (r.info.empty() ? "" : "; ") + std::to_string(kInstances.size()) + " spaces";
    return r;
}

Result spectrum_oracle()
{
    Result r;
    std::size_t n = 0;
    for (const auto& x : kInstances) {
        const auto cat = geom::GeneratorCatalog::enumerate(geom::PolarSpace::make(x.f, x.d, x.q));
        if (cat.size() > 1000)
            continue;
        ++n;
        const auto rel = scheme::build_relations(cat);
        const auto eig = qcount::eigen_data(x.f, x.d, x.q);
        const auto rep = scheme::verify_spectrum(rel, eig);
        r.expect(rep.ok && rep.annihilation_checked.size() == static_cast<std::size_t>(x.d + 1),
                 name(x) + " annihilation");
        for (int i = 0; i <= x.d; ++i)
            for (int j = 0; j <= x.d; ++j) {
                Rational s = 0;
                for (int k = 0; k <= x.d; ++k)
                    s += Rational(eig.P[i][k]) * eig.Q[k][j];
                r.expect(s == (i == j ? Rational(eig.n) : Rational(0)), name(x) + " PQ = nI");
            }
    }
    r.info += (r.info.empty() ? "" : "; ") + std::to_string(n) + " spaces";
    return r;
}

Result classical_bounds()
{
    Result r;
    for (const auto& x : kInstances) {
        const auto b = specbound::classical_bound(x.f, x.d, x.q);
        if (x.f == Family::Qplus)
            r.expect(b.bound == Rational(qcount::num_generators(x.f, x.d, x.q)) / 2, name(x) + " n/2");
        else if (x.f != Family::Hodd)
            r.expect(b.bound == Rational(qcount::generators_on_point(x.f, x.d, x.q)), name(x) + " generators on a point");
    }
    shell::CheckParams qp{Family::Qplus, 4, 2};
    check_passes("thm5-support", qp, r);
    shell::CheckParams qo{Family::Qparabolic, 2, 2};
    check_passes("thm5-support", qo, r);

    const auto cat = geom::GeneratorCatalog::enumerate(geom::PolarSpace::make(Family::Qplus, 4, 2));
    const auto rel = scheme::build_relations(cat);
    const auto eig = qcount::eigen_data(Family::Qplus, 4, 2);
    const auto [x1, x2] = extremal::bipartition_latins_greeks(cat);
    const auto sup = scheme::eigenspace_support(scheme::characteristic_vector(cat.size(), x1.indices()), rel, eig);
    r.expect(sup == std::set<int>{0, 4}, "latins support");

    const auto qc = geom::GeneratorCatalog::enumerate(geom::PolarSpace::make(Family::Qparabolic, 2, 2));
    const auto qrel = scheme::build_relations(qc);
    const auto qeig = qcount::eigen_data(Family::Qparabolic, 2, 2);
    const geom::Subspace pt(qc.space().field(), 5, {qc.points().point(0)});
    const auto ps = scheme::eigenspace_support(scheme::characteristic_vector(qc.size(), qc.generators_through(pt)),
                                               qrel, qeig);
    r.expect(std::includes(std::set<int>{0, 1, 2}.begin(), std::set<int>{0, 1, 2}.end(), ps.begin(), ps.end()),
             "pencil support");
    return r;
}

Result timed_check(const std::string& id, const shell::CheckParams& p, double limit)
{
    Result r;
    const auto t0 = Clock::now();
    check_passes(id, p, r);
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    r.expect(s < limit, id + " exceeded " + std::to_string(static_cast<int>(limit)) + "s");
    return r;
}

Result symplectic_and_parabolic_sweeps()
{
    Result r;
    for (auto x : {Instance{Family::Qparabolic, 2, 2}, Instance{Family::W, 2, 2}, Instance{Family::W, 2, 3}}) {
        const auto t0 = Clock::now();
        check_passes("thm15", shell::CheckParams{x.f, x.d, x.q}, r);
        r.expect(std::chrono::duration<double>(Clock::now() - t0).count() < 60, name(x) + " over 1 minute");
    }
    return r;
}

Result hermitian_sweep()
{
    Result r = timed_check("thm20", shell::CheckParams{std::nullopt, std::nullopt, 2}, 120);
    const auto b = specbound::classical_bound(Family::Hodd, 2, 4);
    r.expect(b.bound == Rational(27, 5), "plain bound 27/5");
    r.expect(b.bound * b.bound == Rational(729, 25) && Rational(729, 25) > 11, "27/5 squared exceeds 11");
    return r;
}

Result prop10_lemma11()
{
    Result r;
    check_passes("prop10", {}, r);
    check_passes("lemma11", {}, r);
    return r;
}

Result hermitian_machinery()
{
    Result r;
    const auto eig = qcount::eigen_data(Family::Hodd, 3, 4);
    const auto h = specbound::hermitian_cross_bound(3, 2);
    const Rational f1c = h.params.f1 * h.params.c;
    r.expect(eig.Q[0][1] == 252 && h.params.f1 == 252, "Q_{0,1} = f1 = 252");
    r.expect(eig.Q[2][1] == Rational(9, 2) && f1c == Rational(9, 2), "Q_{2,1} = f1 c = 9/2");
    for (int s = 0; s < 3; ++s)
        r.expect(eig.Q[s][1] >= f1c, "Q_{s,1} >= f1 c");
    r.expect(eig.Q[3][1] < 0, "Q_{3,1} < 0");
    const auto& w = h.matrix.weights;
    r.expect(w[0] == 0 && w[2] == 0 && w[1] <= 0 && w[3] > 0, "weight signs");
    r.expect(h.params.lambda_b_second_largest, "lambda_b second largest");
    r.expect(h.value && *h.value > 32 && *h.value < 96, "cross bound in (32, 96)");
    check_passes("q-col-signs", {}, r);
    if (h.value)
        r.info += (r.info.empty() ? "" : "; ") + std::string("cross bound ") + to_decimal(*h.value);
    return r;
}

Result determinism()
{
    Result r;
    for (const auto& id : shell::check_ids()) {
        const auto a = shell::run_check(id, {}).dump(2);
        const auto b = shell::run_check(id, {}).dump(2);
        r.expect(a == b, id + " differs between runs");
    }
    return r;
}

} // namespace

int main()
{
    const std::vector<std::tuple<int, std::string, std::function<Result()>>> criteria{
        {1, "generator counts equal the product formula", generator_counts},
        {2, "annihilating polynomials and PQ = nI", spectrum_oracle},
        {3, "classical bounds and predicted eigenspace supports", classical_bounds},
        {4, "maximum pairs on Q(4,2), W(3,2), W(3,3)", symplectic_and_parabolic_sweeps},
        {5, "five families of maximal pairs on H(3,4)", hermitian_sweep},
        {6, "dimension profile and hyperplane construction on Q(4,2)", prop10_lemma11},
        {7, "transversals of disjoint line triples in W(3,3)",
         [] { return timed_check("thm16", shell::CheckParams{std::nullopt, std::nullopt, 3}, 60); }},
        {8, "generator-count inequality for q 2..9, d 1..12", [] { return timed_check("lemma13", {}, 60); }},
        {9, "Hermitian Q column, weights and cross bound", hermitian_machinery},
        {10, "local counts 5883 and 171 in H(7,4)", [] { return timed_check("example21", {}, 600); }},
        {11, "verify output is byte-identical across runs", determinism},
    };
    bool all = true;
    for (const auto& [id, title, fn] : criteria) {
        const auto t0 = Clock::now();
        Result r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.ok = false;
            r.info = e.what();
        }
        const double s = std::chrono::duration<double>(Clock::now() - t0).count();
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", s);
        std::cout << (r.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << secs
                  << (r.info.empty() ? "" : "; " + r.info) << ")\n";
        all = all && r.ok;
    }
    return all ? 0 : 1;
}
