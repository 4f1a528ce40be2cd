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

#ifndef POLARB_SPECBOUND_HPP
#define POLARB_SPECBOUND_HPP

#include "exact.hpp"
#include "qcount.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace polarb::specbound {

struct IndexedEigenvalue {
    int index = 0;
    Rational value;
};

/// Which equality case of the cross bound applies:
///   a: lambda_plus = lambda_b > -lambda_minus
///   b: lambda_plus < lambda_b = -lambda_minus
///   c: lambda_plus = lambda_b = -lambda_minus
enum class EqualityCase { a, b, c };
char case_letter(EqualityCase c);

struct BoundReport {
    std::string space;
    Rational n;
    Rational k;
    Rational lambda_plus;
    Rational lambda_minus;
    Rational lambda_b;
    std::vector<int> plus_indices;
    std::vector<int> minus_indices;
    /// k is also an eigenvalue outside <j>, so lambda_plus = k.
    bool degenerate = false;
    /// lambda_b n / (k + lambda_b); also |Y| = |Z| for attaining pairs.
    Rational bound;
    EqualityCase equality_case = EqualityCase::a;
    /// Eigenspaces that may carry chi_Y, chi_Z of an attaining pair.
    std::set<int> predicted_support;
};

/// Cross-intersecting Hoffman bound for an extended weight adjacency matrix
/// given by its eigenvalue per eigenspace. Index 0 must carry the
/// eigenvalue of the all-ones vector.
BoundReport hoffman_cross_bound(const std::vector<IndexedEigenvalue>& eigs, const Rational& n);

/// The disjointness spectrum of (family, d, q) fed to hoffman_cross_bound.
BoundReport classical_bound(Family f, int d, std::uint64_t q);

/// Eigenspaces listed for attaining pairs per family: {0,d} for Qplus,
/// {0,1,d} for parabolic/symplectic, {0,1} for Heven/Qminus. Hodd gets the
/// engine's own prediction.
std::set<int> family_support_prediction(Family f, int d, std::uint64_t q);

/// Parameters of the weighted bound on H(2d-1, q^2); q is the square root of
/// the field order.
struct HermitianParams {
    int d = 0;
    std::uint64_t q = 0;
    Rational n;
    Rational f1;
    Rational c;
    Rational alpha;
    Rational lambda_b;
    Rational k;
    /// Closed-form eigenvalues of A_d - alpha E_1 + (alpha f1 c/n) J
    /// + alpha f1 (1-c)/n I on W_0..W_d.
    std::vector<Rational> eigenvalues;
    /// |lambda_b| is the largest absolute value among W_1..W_d.
    bool lambda_b_second_largest = false;
};

HermitianParams hermitian_params(int d, std::uint64_t q);

struct WeightedMatrixSpec {
    Rational coeff_disjoint; // A_d
    Rational coeff_e1;       // E_1
    Rational coeff_j;        // J
    Rational coeff_i;        // I
    /// Entry on pairs in relation R_i.
    std::vector<Rational> weights;
    /// sum_i w_i P[r][i] for each eigenspace r.
    std::vector<Rational> eigenvalues;
    /// sum_i n_i w_i.
    Rational k;
    /// w_0 = 0, w_i <= 0 for 0 < i < d, not identically zero.
    bool extended_weight = false;
    std::vector<std::string> violations;
};

WeightedMatrixSpec hermitian_weighted_matrix(const HermitianParams& params, const qcount::EigenData& eig);

struct HermitianCrossBound {
    HermitianParams params;
    WeightedMatrixSpec matrix;
    /// n |lambda_b| / (k + |lambda_b|); empty when the denominator vanishes.
    std::optional<Rational> value;
    /// The weighted matrix satisfies the extended-weight conditions and k > 0.
    bool conditionally_valid = false;
    /// The plain disjointness-graph bound for comparison.
    BoundReport plain;
};

HermitianCrossBound hermitian_cross_bound(int d, std::uint64_t q);

/// (n q^(d-1) - f1 (q^(d-1) - 1)(1 - c)) / (q^(2d-1) + q^(d-1) + f1 (q^(d-1) - 1) c)
/// for odd d > 1.
Rational hermitian_ekr_bound(int d, std::uint64_t q);

} // namespace polarb::specbound

#endif
