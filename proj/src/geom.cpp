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

#include <algorithm>
#include <map>
#include <utility>

namespace polarb::geom {

// ---------------------------------------------------------------------------
// Linear algebra

Matrix rref(const Field& F, Matrix rows)
{
    if (rows.empty())
        return rows;
    const std::size_t n = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        const Elem inv = F.inv(rows[r][c]);
        for (auto& x : rows[r])
            x = F.mul(x, inv);
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || rows[o][c] == 0)
                continue;
            const Elem f = rows[o][c];
            for (std::size_t k = c; k < n; ++k)
                rows[o][k] = F.sub(rows[o][k], F.mul(f, rows[r][k]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

int rank(const Field& F, Matrix rows) { return static_cast<int>(rref(F, std::move(rows)).size()); }

Matrix null_space(const Field& F, const Matrix& A, int n)
{
    Matrix R = rref(F, A);
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (const auto& row : R) {
        int c = 0;
        while (row[c] == 0)
            ++c;
        pivot_of_row.push_back(c);
        is_pivot[c] = true;
    }
    Matrix out;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vec v(static_cast<std::size_t>(n), 0);
        v[f] = 1;
        for (std::size_t r = 0; r < R.size(); ++r)
            v[pivot_of_row[r]] = F.neg(R[r][f]);
        out.push_back(std::move(v));
    }
    return out;
}

Vec normalize(const Field& F, Vec v)
{
    for (auto x : v) {
        if (x == 0)
            continue;
        const Elem inv = F.inv(x);
        for (auto& y : v)
            y = F.mul(y, inv);
        break;
    }
    return v;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Subspace::Subspace(const Field& F, int ambient, Matrix rows) : ambient_(ambient)
{
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != ambient)
            fail(ErrorCode::invalid_argument, "subspace row length does not match the ambient dimension");
    basis_ = rref(F, std::move(rows));
}

Subspace Subspace::whole(const Field& F, int ambient)
{
    Matrix id(static_cast<std::size_t>(ambient), Vec(static_cast<std::size_t>(ambient), 0));
    for (int i = 0; i < ambient; ++i)
        id[i][i] = 1;
    return Subspace(F, ambient, std::move(id));
}

bool Subspace::contains(const Field& F, const Vec& v) const
{
    Matrix rows = basis_;
    rows.push_back(v);
    return rank(F, std::move(rows)) == dim();
}

bool Subspace::contains(const Field& F, const Subspace& s) const
{
    Matrix rows = basis_;
    rows.insert(rows.end(), s.basis().begin(), s.basis().end());
    return rank(F, std::move(rows)) == dim();
}

std::string Subspace::key() const
{
    std::string k;
    k.reserve(basis_.size() * static_cast<std::size_t>(ambient_) * 2);
    for (const auto& row : basis_)
        for (auto x : row) {
            k.push_back(static_cast<char>(x >> 8));
            k.push_back(static_cast<char>(x & 0xff));
        }
    return k;
}

Subspace span(const Field& F, const Subspace& a, const Subspace& b)
{
    Matrix rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace(F, a.ambient(), std::move(rows));
}

Subspace intersect(const Field& F, const Subspace& a, const Subspace& b)
{
    const int n = a.ambient();
    Matrix ann = null_space(F, a.basis(), n);
    Matrix annb = null_space(F, b.basis(), n);
    ann.insert(ann.end(), annb.begin(), annb.end());
    return Subspace(F, n, null_space(F, ann, n));
}

namespace {

// Iterate over all coefficient vectors of length t.
template <class Fn>
void for_each_coeffs(unsigned q, int t, Fn&& fn)
{
    Vec c(static_cast<std::size_t>(t), 0);
    while (true) {
        fn(c);
        int i = t - 1;
        while (i >= 0 && c[i] == q - 1) {
            c[i] = 0;
            --i;
        }
        if (i < 0)
            return;
        ++c[i];
    }
}

Vec combine(const Field& F, const Matrix& basis, const Vec& coeffs, int n)
{
    Vec v(static_cast<std::size_t>(n), 0);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        if (coeffs[r] == 0)
            continue;
        for (int k = 0; k < n; ++k)
            v[k] = F.add(v[k], F.mul(coeffs[r], basis[r][k]));
    }
    return v;
}

} // namespace

std::vector<Vec> points_of(const Field& F, const Subspace& s)
{
    std::vector<Vec> out;
    for_each_coeffs(F.order(), s.dim(), [&](const Vec& c) {
        // the first non-zero coefficient sits on the leading pivot, so the
        // combination is normalized exactly when that coefficient is 1
        auto it = std::find_if(c.begin(), c.end(), [](Elem x) { return x != 0; });
        if (it == c.end() || *it != 1)
            return;
        out.push_back(combine(F, s.basis(), c, s.ambient()));
    });
    return out;
}

std::vector<Subspace> all_subspaces(const Field& F, int n, int k)
{
    std::vector<Subspace> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        pivots[i] = i;
    while (true) {
        // free positions: (row r, column c) with c > pivot r, c not a pivot
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < k; ++r)
            for (int c = pivots[r] + 1; c < n; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                    free.emplace_back(r, c);
        for_each_coeffs(F.order(), static_cast<int>(free.size()), [&](const Vec& vals) {
            Matrix m(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(n), 0));
            for (int r = 0; r < k; ++r)
                m[r][pivots[r]] = 1;
            for (std::size_t f = 0; f < free.size(); ++f)
                m[free[f].first][free[f].second] = vals[f];
            out.emplace_back(F, n, std::move(m));
        });
        int i = k - 1;
        while (i >= 0 && pivots[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j)
            pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.key() < b.key(); });
    return out;
}

Vec coordinates(const Field& F, const Matrix& basis, const Vec& v)
{
    // Solve sum_r x_r basis[r] = v via the augmented system with one equation
    // per coordinate.
    const std::size_t t = basis.size();
    const std::size_t n = v.size();
    Matrix aug(n, Vec(t + 1, 0));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < t; ++r)
            aug[c][r] = basis[r][c];
        aug[c][t] = v[c];
    }
    Matrix R = rref(F, aug);
    Vec x(t, 0);
    for (const auto& row : R) {
        std::size_t c = 0;
        while (row[c] == 0)
            ++c;
        if (c == t)
            fail(ErrorCode::invalid_argument, "vector is not in the span of the basis");
        x[c] = row[t];
    }
    return x;
}

// ---------------------------------------------------------------------------
// Polar spaces

PolarSpace PolarSpace::make(Family family, int d, std::uint64_t q)
{
    check_parameters(family, d, q);
    const auto pk = *prime_power(q);
    auto field = std::make_shared<const Field>(pk.first, pk.second);
    const Field& F = *field;
    const int nv = ambient_dim(family, d);
    const auto N = static_cast<std::size_t>(nv);
    Matrix gram(N, Vec(N, 0));
    Matrix quad;
    FormKind kind = FormKind::alternating;
    const Elem one = 1;
    const Elem minus_one = F.neg(1);

    switch (family) {
    case Family::W:
        for (int i = 0; i < d; ++i) {
            gram[i][d + i] = one;
            gram[d + i][i] = minus_one;
        }
        break;
    case Family::Hodd:
    case Family::Heven:
        kind = FormKind::hermitian;
        for (int i = 0; i < nv; ++i)
            gram[i][nv - 1 - i] = one;
        break;
    case Family::Qplus:
    case Family::Qparabolic:
    case Family::Qminus: {
        kind = FormKind::quadratic;
        quad.assign(N, Vec(N, 0));
        int start = 0;
        if (family == Family::Qparabolic) {
            quad[0][0] = one;
            start = 1;
        } else if (family == Family::Qminus) {
            // x^2 + xy + c y^2 with t^2 + t + c irreducible
            Elem c = 0;
            for (unsigned cand = 0; cand < F.order(); ++cand) {
                bool has_root = false;
                for (unsigned t = 0; t < F.order() && !has_root; ++t) {
                    const auto tt = static_cast<Elem>(t);
                    has_root = F.add(F.add(F.mul(tt, tt), tt), static_cast<Elem>(cand)) == 0;
                }
                if (!has_root) {
                    c = static_cast<Elem>(cand);
                    break;
                }
            }
            quad[0][0] = one;
            quad[0][1] = one;
            quad[1][1] = c;
            start = 2;
        }
        for (int i = start; i + 1 < nv; i += 2)
            quad[i][i + 1] = one;
        break;
    }
    }
    return from_form(family, d, std::move(field), kind, std::move(gram), std::move(quad));
}

PolarSpace PolarSpace::from_form(Family family, int d, std::shared_ptr<const Field> field, FormKind kind,
                                 Matrix gram, Matrix quad)
{
    PolarSpace ps;
    ps.family_ = family;
    ps.d_ = d;
    ps.field_ = std::move(field);
    ps.kind_ = kind;
    ps.quad_ = std::move(quad);
    const Field& F = *ps.field_;
    if (kind == FormKind::quadratic) {
        const std::size_t n = ps.quad_.size();
        gram.assign(n, Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                if (i == j) {
                    gram[i][i] = F.add(ps.quad_[i][i], ps.quad_[i][i]);
                } else {
                    gram[i][j] = F.add(gram[i][j], ps.quad_[i][j]);
                    gram[j][i] = F.add(gram[j][i], ps.quad_[i][j]);
                }
            }
    }
    if (kind == FormKind::hermitian && !F.is_square_order())
        fail(ErrorCode::invalid_argument, "Hermitian form over a field of non-square order");
    ps.gram_ = std::move(gram);
    ps.nv_ = static_cast<int>(ps.gram_.size());
    ps.verify_nondegenerate();
    return ps;
}

std::string PolarSpace::describe() const
{
    return std::string(family_name(family_)) + "(d=" + std::to_string(d_) + ", q=" + std::to_string(q()) + ")";
}

void PolarSpace::check_vec(const Vec& v) const
{
    if (static_cast<int>(v.size()) != nv_)
        fail(ErrorCode::invalid_argument, "vector length does not match the ambient dimension");
}

Elem PolarSpace::form(const Vec& x, const Vec& y) const
{
    check_vec(x);
    check_vec(y);
    const Field& F = *field_;
    Elem acc = 0;
    for (int i = 0; i < nv_; ++i) {
        if (x[i] == 0)
            continue;
        Elem row = 0;
        for (int j = 0; j < nv_; ++j) {
            if (gram_[i][j] == 0 || y[j] == 0)
                continue;
            const Elem yj = kind_ == FormKind::hermitian ? F.conjugate(y[j]) : y[j];
            row = F.add(row, F.mul(gram_[i][j], yj));
        }
        acc = F.add(acc, F.mul(x[i], row));
    }
    return acc;
}

Elem PolarSpace::quad_value(const Vec& x) const
{
    check_vec(x);
    if (kind_ != FormKind::quadratic)
        fail(ErrorCode::invalid_argument, "quadratic form value requested on a sesquilinear space");
    const Field& F = *field_;
    Elem acc = 0;
    for (int i = 0; i < nv_; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = i; j < nv_; ++j)
            if (quad_[i][j] != 0 && x[j] != 0)
                acc = F.add(acc, F.mul(quad_[i][j], F.mul(x[i], x[j])));
    }
    return acc;
}

bool PolarSpace::is_singular(const Vec& v) const
{
    if (kind_ == FormKind::quadratic)
        return quad_value(v) == 0;
    return form(v, v) == 0;
}

bool PolarSpace::is_totally_isotropic(const Subspace& s) const
{
    if (s.ambient() != nv_)
        fail(ErrorCode::invalid_argument, "subspace does not live in the ambient space");
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!is_singular(b[i]))
            return false;
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (form(b[i], b[j]) != 0)
                return false;
    }
    return true;
}

Subspace PolarSpace::perp(const Subspace& s) const
{
    if (s.ambient() != nv_)
        fail(ErrorCode::invalid_argument, "subspace does not live in the ambient space");
    const Field& F = *field_;
    // B(v, s) = sum_i v_i (sum_j G_ij s~_j) is linear in v.
    Matrix eqs;
    for (const auto& row : s.basis()) {
        Vec e(static_cast<std::size_t>(nv_), 0);
        for (int i = 0; i < nv_; ++i)
            for (int j = 0; j < nv_; ++j) {
                if (gram_[i][j] == 0 || row[j] == 0)
                    continue;
                const Elem sj = kind_ == FormKind::hermitian ? F.conjugate(row[j]) : row[j];
                e[i] = F.add(e[i], F.mul(gram_[i][j], sj));
            }
        eqs.push_back(std::move(e));
    }
    return Subspace(F, nv_, null_space(F, eqs, nv_));
}

void PolarSpace::verify_nondegenerate() const
{
    const Field& F = *field_;
    Subspace radical = perp(Subspace::whole(F, nv_));
    if (radical.dim() == 0)
        return;
    if (kind_ != FormKind::quadratic)
        fail(ErrorCode::invalid_argument, "degenerate form: radical of dimension " + std::to_string(radical.dim()));
    for (const auto& v : points_of(F, radical))
        if (quad_value(v) == 0)
            fail(ErrorCode::invalid_argument, "degenerate quadratic form: singular radical vector");
}

PolarSpace PolarSpace::restrict_to(const Matrix& basis, Family family, int d) const
{
    const std::size_t m = basis.size();
    Matrix gram(m, Vec(m, 0));
    Matrix quad;
    if (kind_ == FormKind::quadratic) {
        quad.assign(m, Vec(m, 0));
        for (std::size_t a = 0; a < m; ++a) {
            quad[a][a] = quad_value(basis[a]);
            for (std::size_t b = a + 1; b < m; ++b)
                quad[a][b] = form(basis[a], basis[b]);
        }
    } else {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                gram[a][b] = form(basis[a], basis[b]);
    }
    return from_form(family, d, field_, kind_, std::move(gram), std::move(quad));
}

// ---------------------------------------------------------------------------
// Points

PointSet::PointSet(const PolarSpace& ps) : field_(&ps.field())
{
    const Field& F = ps.field();
    const int n = ps.ambient();
    long double total = 1;
    for (int i = 0; i < n; ++i)
        total *= F.order();
    if (total > static_cast<long double>(1u << 26))
        fail(ErrorCode::limit_exceeded, "ambient space too large for point enumeration");
    for_each_coeffs(F.order(), n, [&](const Vec& v) {
        auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
        if (it == v.end() || *it != 1)
            return;
        if (!ps.is_singular(v))
            return;
        index_.emplace(code(v), points_.size());
        points_.push_back(v);
    });

    // Linear functionals v -> B(v, p) make the orthogonality table a dot
    // product per pair.
    Matrix funcs;
    for (const auto& p : points_) {
        Vec e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Elem g = ps.gram()[i][j];
                if (g == 0 || p[j] == 0)
                    continue;
                const Elem pj = ps.kind() == FormKind::hermitian ? F.conjugate(p[j]) : p[j];
                e[i] = F.add(e[i], F.mul(g, pj));
            }
        funcs.push_back(std::move(e));
    }
    ortho_.assign(points_.size(), Bitset(points_.size()));
    for (std::size_t a = 0; a < points_.size(); ++a)
        for (std::size_t b = a; b < points_.size(); ++b) {
            Elem acc = 0;
            for (int i = 0; i < n; ++i)
                if (points_[a][i] != 0 && funcs[b][i] != 0)
                    acc = F.add(acc, F.mul(points_[a][i], funcs[b][i]));
            if (acc == 0) {
                ortho_[a].set(b);
                ortho_[b].set(a);
            }
        }
}

std::uint64_t PointSet::code(const Vec& v) const
{
    std::uint64_t c = 0;
    for (auto x : v)
        c = c * field_->order() + x;
    return c;
}

std::size_t PointSet::index(const Vec& v) const
{
    auto it = index_.find(code(v));
    if (it == index_.end())
        fail(ErrorCode::invalid_argument, "vector is not a normalized singular point");
    return it->second;
}

Bitset PointSet::points_of(const Subspace& s) const
{
    Bitset b(points_.size());
    for (const auto& v : geom::points_of(*field_, s))
        b.set(index(v));
    return b;
}

// ---------------------------------------------------------------------------
// Generators

GeneratorCatalog GeneratorCatalog::enumerate(const PolarSpace& ps, std::uint64_t limit)
{
    const Integer expected = qcount::num_generators(ps.family(), ps.rank(), ps.q());
    if (expected > limit)
        fail(ErrorCode::limit_exceeded, ps.describe() + " has " + expected.str() + " generators, above the limit of "
                                            + std::to_string(limit));
    const Field& F = ps.field();
    auto points = std::make_shared<const PointSet>(ps);

    // Level-wise extension by singular points in the perp, deduplicated on
    // canonical keys. Level t holds every totally isotropic t-space.
    std::vector<Subspace> level;
    for (std::size_t i = 0; i < points->size(); ++i)
        level.emplace_back(F, ps.ambient(), Matrix{points->point(i)});
    for (int t = 1; t < ps.rank(); ++t) {
        std::map<std::string, Subspace> next;
        for (const auto& S : level) {
            Bitset cand = Bitset::full(points->size());
            for (const auto& row : S.basis())
                cand &= points->orthogonal(points->index(row));
            cand.subtract(points->points_of(S));
            for (std::size_t p = cand.first(); p < cand.size(); p = cand.next(p)) {
                Matrix rows = S.basis();
                rows.push_back(points->point(p));
                Subspace T(F, ps.ambient(), std::move(rows));
                cand.subtract(points->points_of(T));
                auto key = T.key();
                next.emplace(std::move(key), std::move(T));
            }
        }
        level.clear();
        level.reserve(next.size());
        for (auto& kv : next)
            level.push_back(std::move(kv.second));
    }
    std::sort(level.begin(), level.end(), [](const Subspace& a, const Subspace& b) { return a.key() < b.key(); });
    if (Integer(level.size()) != expected)
        fail(ErrorCode::internal, ps.describe() + ": enumerated " + std::to_string(level.size())
                                      + " generators, closed form gives " + expected.str());

    GeneratorCatalog cat;
    cat.space_ = std::make_shared<const PolarSpace>(ps);
    cat.points_ = std::move(points);
    cat.gens_ = std::move(level);
    cat.index_all();
    return cat;
}

GeneratorCatalog GeneratorCatalog::from_list(const PolarSpace& ps, std::vector<Subspace> gens)
{
    GeneratorCatalog cat;
    cat.space_ = std::make_shared<const PolarSpace>(ps);
    cat.points_ = std::make_shared<const PointSet>(ps);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].dim() != ps.rank() || !ps.is_totally_isotropic(gens[i]))
            fail(ErrorCode::format, "entry " + std::to_string(i) + " is not a generator");
        if (i > 0 && !(gens[i - 1].key() < gens[i].key()))
            fail(ErrorCode::format, "generator list is not in canonical order");
    }
    cat.gens_ = std::move(gens);
    cat.index_all();
    return cat;
}

void GeneratorCatalog::index_all()
{
    index_.clear();
    gen_points_.clear();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        index_.emplace(gens_[i].key(), i);
        gen_points_.push_back(points_->points_of(gens_[i]));
    }
    dim_of_count_.clear();
    for (int t = 0; t <= space_->rank(); ++t)
        dim_of_count_.emplace(qcount::gaussian(t, 1, space_->q()).convert_to<std::size_t>(), t);
}

std::size_t GeneratorCatalog::find(const Subspace& s) const
{
    auto it = index_.find(s.key());
    return it == index_.end() ? gens_.size() : it->second;
}

int GeneratorCatalog::codim_intersection(std::size_t i, std::size_t j) const
{
    Matrix rows = gens_.at(i).basis();
    const auto& other = gens_.at(j).basis();
    rows.insert(rows.end(), other.begin(), other.end());
    // dim(a ∩ b) = 2d - rank(a + b), so the codimension is rank - d
    return rank(space_->field(), std::move(rows)) - space_->rank();
}

int GeneratorCatalog::meet_dim(std::size_t i, std::size_t j) const
{
    const std::size_t shared = and_count(gen_points_.at(i), gen_points_.at(j));
    auto it = dim_of_count_.find(shared);
    if (it == dim_of_count_.end())
        fail(ErrorCode::internal, "intersection point count is not a projective space size");
    return it->second;
}

int GeneratorCatalog::codim_fast(std::size_t i, std::size_t j) const { return space_->rank() - meet_dim(i, j); }

std::vector<std::size_t> GeneratorCatalog::generators_through(const Subspace& s) const
{
    if (!space_->is_totally_isotropic(s))
        fail(ErrorCode::invalid_argument, "subspace is not totally isotropic");
    const Bitset pts = points_->points_of(s);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (pts.is_subset_of(gen_points_[i]))
            out.push_back(i);
    return out;
}

Subspace find_generator(const PolarSpace& ps)
{
    const Field& F = ps.field();
    Subspace S = Subspace::zero(ps.ambient());
    while (S.dim() < ps.rank()) {
        const Subspace P = ps.perp(S);
        bool extended = false;
        for (const auto& v : points_of(F, P)) {
            if (!ps.is_singular(v) || S.contains(F, v))
                continue;
            Matrix rows = S.basis();
            rows.push_back(v);
            S = Subspace(F, ps.ambient(), std::move(rows));
            extended = true;
            break;
        }
        if (!extended)
            fail(ErrorCode::internal, "totally isotropic subspace cannot be extended below the rank");
    }
    return S;
}

// ---------------------------------------------------------------------------
// Quotients

Quotient::Quotient(const PolarSpace& ps, const Subspace& L) : ps_(ps), L_(L)
{
    const Field& F = ps.field();
    if (L.dim() > ps.rank())
        fail(ErrorCode::invalid_argument, "quotient base is larger than the rank");
    if (!ps.is_totally_isotropic(L))
        fail(ErrorCode::invalid_argument, "quotient base is not totally isotropic");
    perpL_ = ps.perp(L);
    Matrix acc = L.basis();
    int r = L.dim();
    for (const auto& row : perpL_.basis()) {
        Matrix trial = acc;
        trial.push_back(row);
        if (rank(F, trial) > r) {
            acc = std::move(trial);
            ++r;
            complement_.push_back(row);
        }
    }
    frame_ = complement_;
    frame_.insert(frame_.end(), L.basis().begin(), L.basis().end());
    quotient_ = ps.restrict_to(complement_, ps.family(), ps.rank() - L.dim());
}

Subspace Quotient::image(const Subspace& g) const
{
    const Field& F = ps_.field();
    const Subspace part = intersect(F, g, perpL_);
    Matrix rows;
    for (const auto& w : part.basis()) {
        Vec x = coordinates(F, frame_, w);
        x.resize(complement_.size());
        rows.push_back(std::move(x));
    }
    return Subspace(F, static_cast<int>(complement_.size()), std::move(rows));
}

Subspace Quotient::lift(const Subspace& s) const
{
    const Field& F = ps_.field();
    Matrix rows = L_.basis();
    for (const auto& a : s.basis()) {
        Vec v(static_cast<std::size_t>(ps_.ambient()), 0);
        for (std::size_t r = 0; r < a.size(); ++r)
            for (int k = 0; k < ps_.ambient(); ++k)
                v[k] = F.add(v[k], F.mul(a[r], complement_[r][k]));
        rows.push_back(std::move(v));
    }
    return Subspace(F, ps_.ambient(), std::move(rows));
}

Subspace quotient_map(const PolarSpace& ps, const Subspace& L, const Subspace& g)
{
    return Quotient(ps, L).image(g);
}

} // namespace polarb::geom
