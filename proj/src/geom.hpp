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

#ifndef POLARB_GEOM_HPP
#define POLARB_GEOM_HPP

#include "bits.hpp"
#include "ff.hpp"
#include "qcount.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace polarb::geom {

using ff::Elem;
using ff::Field;
using Vec = std::vector<Elem>;
using Matrix = std::vector<Vec>;

// Linear algebra over a finite field. Matrices are lists of row vectors.

/// Reduced row echelon form with unit pivots and zero rows dropped. This is
/// the canonical basis of the row space.
Matrix rref(const Field& F, Matrix rows);
int rank(const Field& F, Matrix rows);
/// Basis of { x : A x = 0 } for an r x n matrix A (rows of length n).
Matrix null_space(const Field& F, const Matrix& A, int n);
/// Scale so that the first non-zero entry is 1.
Vec normalize(const Field& F, Vec v);
bool is_zero(const Vec& v);

/// A subspace of F^n stored by its canonical (reduced echelon) basis.
class Subspace {
public:
    Subspace() = default;
    Subspace(const Field& F, int ambient, Matrix rows);

    static Subspace zero(int ambient) { return Subspace(ambient); }
    static Subspace whole(const Field& F, int ambient);

    int ambient() const noexcept { return ambient_; }
    int dim() const noexcept { return static_cast<int>(basis_.size()); }
    const Matrix& basis() const noexcept { return basis_; }

    bool contains(const Field& F, const Vec& v) const;
    bool contains(const Field& F, const Subspace& s) const;

    /// Big-endian byte string of the basis codes; lexicographic order on
    /// these keys is the catalog order.
    std::string key() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    explicit Subspace(int ambient) : ambient_(ambient) {}
    int ambient_ = 0;
    Matrix basis_;
};

Subspace span(const Field& F, const Subspace& a, const Subspace& b);
Subspace intersect(const Field& F, const Subspace& a, const Subspace& b);
/// All normalized non-zero vectors (projective points) of a subspace.
std::vector<Vec> points_of(const Field& F, const Subspace& s);
/// Every k-dimensional subspace of F^n, in lexicographic key order.
std::vector<Subspace> all_subspaces(const Field& F, int n, int k);
/// Coordinates of v in the given basis (which must span v).
Vec coordinates(const Field& F, const Matrix& basis, const Vec& v);

enum class FormKind { quadratic, alternating, hermitian };

/// A finite classical polar space: a field, a vector space dimension and a
/// non-degenerate reflexive sesquilinear or quadratic form.
///
/// For quadratic forms `quad` holds the coefficients c_ij (i <= j) of
/// Q(x) = sum c_ij x_i x_j and `gram` its polarization. Singularity is
/// always decided by Q, so characteristic 2 is handled uniformly.
class PolarSpace {
public:
    /// The standard form for the family:
    ///   W       sum_i x_i y_{d+i} - x_{d+i} y_i
    ///   Qplus   sum_i x_{2i} x_{2i+1}
    ///   Qparab  x_0^2 + sum_{i>=1} x_{2i-1} x_{2i}
    ///   Qminus  x_0^2 + x_0 x_1 + c x_1^2 + sum_{i>=1} x_{2i} x_{2i+1}
    ///   H       sum_i x_i conj(y_{n-1-i})  (antidiagonal Gram matrix)
    static PolarSpace make(Family family, int d, std::uint64_t q);

    /// A polar space on an arbitrary form; non-degeneracy is verified.
    static PolarSpace from_form(Family family, int d, std::shared_ptr<const Field> field, FormKind kind,
                                Matrix gram, Matrix quad);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return d_; }
    int tau() const noexcept { return twice_type(family_); }
    int ambient() const noexcept { return nv_; }
    std::uint64_t q() const noexcept { return field_->order(); }
    const Field& field() const noexcept { return *field_; }
    std::shared_ptr<const Field> field_ptr() const noexcept { return field_; }
    FormKind kind() const noexcept { return kind_; }
    const Matrix& gram() const noexcept { return gram_; }
    const Matrix& quad() const noexcept { return quad_; }
    std::string describe() const;

    /// B(x, y); semilinear in y for Hermitian forms.
    Elem form(const Vec& x, const Vec& y) const;
    Elem quad_value(const Vec& x) const;
    bool is_singular(const Vec& v) const;
    bool is_totally_isotropic(const Subspace& s) const;
    Subspace perp(const Subspace& s) const;

    /// The form restricted to the row space of `basis`, as a polar space in
    /// the coordinates of that basis.
    PolarSpace restrict_to(const Matrix& basis, Family family, int d) const;

    PolarSpace() = default;

private:
    void verify_nondegenerate() const;
    void check_vec(const Vec& v) const;

    Family family_ = Family::W;
    int d_ = 0;
    int nv_ = 0;
    std::shared_ptr<const Field> field_;
    FormKind kind_ = FormKind::alternating;
    Matrix gram_;
    Matrix quad_;
};

/// Singular projective points of the space with an index and, per point, the
/// set of points orthogonal to it.
class PointSet {
public:
    explicit PointSet(const PolarSpace& ps);

    std::size_t size() const noexcept { return points_.size(); }
    const Vec& point(std::size_t i) const { return points_[i]; }
    /// Index of a normalized singular vector; throws when absent.
    std::size_t index(const Vec& v) const;
    const Bitset& orthogonal(std::size_t i) const { return ortho_[i]; }
    Bitset points_of(const Subspace& s) const;

private:
    std::uint64_t code(const Vec& v) const;
    const Field* field_;
    std::vector<Vec> points_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<Bitset> ortho_;
};

inline constexpr std::uint64_t kDefaultGeneratorLimit = 200000;

/// Every generator of a polar space in lexicographic order of canonical
/// basis keys, together with the singular point set and per-generator point
/// bitsets used for fast intersection dimensions.
class GeneratorCatalog {
public:
    /// Throws ErrorCode::limit_exceeded when the closed-form generator count
    /// is above `limit`.
    static GeneratorCatalog enumerate(const PolarSpace& ps, std::uint64_t limit = kDefaultGeneratorLimit);
    /// Rebuild from an explicit list (used by the cache reader). Checks every
    /// entry is a generator and the order is canonical.
    static GeneratorCatalog from_list(const PolarSpace& ps, std::vector<Subspace> gens);

    const PolarSpace& space() const noexcept { return *space_; }
    std::size_t size() const noexcept { return gens_.size(); }
    const Subspace& at(std::size_t i) const { return gens_.at(i); }
    const std::vector<Subspace>& generators() const noexcept { return gens_; }
    /// Index of a generator, or size() when the subspace is not listed.
    std::size_t find(const Subspace& s) const;
    const PointSet& points() const noexcept { return *points_; }
    const Bitset& generator_points(std::size_t i) const { return gen_points_.at(i); }

    /// d - dim(g_i ∩ g_j), by rank of the stacked bases.
    int codim_intersection(std::size_t i, std::size_t j) const;
    /// Same value from the shared point count.
    int codim_fast(std::size_t i, std::size_t j) const;
    /// Dimension of the intersection of two generators, via point counts.
    int meet_dim(std::size_t i, std::size_t j) const;

    /// Indices of all generators containing a totally isotropic subspace.
    std::vector<std::size_t> generators_through(const Subspace& s) const;

private:
    GeneratorCatalog() = default;
    void index_all();

    std::shared_ptr<const PolarSpace> space_;
    std::shared_ptr<const PointSet> points_;
    std::vector<Subspace> gens_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Bitset> gen_points_;
    /// point count of a t-space -> t
    std::unordered_map<std::size_t, int> dim_of_count_;
};

/// Some generator, found greedily.
Subspace find_generator(const PolarSpace& ps);

/// The quotient polar space perp(L)/L of a totally isotropic subspace L,
/// in the coordinates of a fixed complement C of L inside perp(L). L may be a
/// generator, in which case the quotient has rank 0.
class Quotient {
public:
    Quotient(const PolarSpace& ps, const Subspace& L);

    const PolarSpace& space() const noexcept { return quotient_; }
    const Subspace& base() const noexcept { return L_; }
    /// ((g ∩ perp L) + L) / L.
    Subspace image(const Subspace& g) const;
    /// Preimage of a subspace of the quotient: L + its lifted span.
    Subspace lift(const Subspace& s) const;

private:
    PolarSpace ps_;
    Subspace L_;
    Subspace perpL_;
    Matrix complement_;
    Matrix frame_; // complement rows followed by the rows of L
    PolarSpace quotient_;
};

/// Convenience wrapper matching the quotient map ((g ∩ perp L) + L)/L.
Subspace quotient_map(const PolarSpace& ps, const Subspace& L, const Subspace& g);

} // namespace polarb::geom

#endif
