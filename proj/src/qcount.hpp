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

#ifndef POLARB_QCOUNT_HPP
#define POLARB_QCOUNT_HPP

#include "exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polarb {

/// The six families of finite classical polar spaces. The field order is
/// always the order of the underlying field, so H(3,4) is (Hodd, 2, 4).
enum class Family { Qplus, Qparabolic, Qminus, W, Hodd, Heven };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Twice the type parameter e.
int twice_type(Family f);
/// Vector space dimension of the ambient space for rank d.
int ambient_dim(Family f, int d);
bool is_hermitian(Family f);
bool is_orthogonal(Family f);

/// Throws ErrorCode::invalid_argument unless (family, d, q) describes a
/// polar space this library can build: q a prime power, square for the
/// Hermitian families, d >= 1.
void check_parameters(Family f, int d, std::uint64_t q);

/// Prime power decomposition q = p^k, or nullopt.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);

namespace qcount {

/// Gaussian binomial [n choose k]_q; zero when k > n or k < 0.
Integer gaussian(int n, int k, const Integer& q);
inline Integer gaussian(int n, int k, std::uint64_t q) { return gaussian(n, k, Integer(q)); }

/// q^(twice_exp/2) for a space of twice-type tau: the base is sqrt(q) when
/// tau is odd (Hermitian), otherwise q.
HalfPower q_power(int tau, std::uint64_t q, long twice_exp, int sign = 1);

Integer num_generators(Family f, int d, std::uint64_t q);
Integer num_points(Family f, int d, std::uint64_t q);
/// Generators through a fixed point: the generator count of rank d - 1.
Integer generators_on_point(Family f, int d, std::uint64_t q);

/// (-1)^r q^(C(d-r,2) + C(r,2) + e(d-r)): eigenvalue of the disjointness
/// relation A_d on the eigenspace W_r.
HalfPower disjointness_eigenvalue(int d, int tau, std::uint64_t q, int r);

/// Eigenvalue of A_i on W_j, via the alternating sum
///   sum_u (-1)^(j+u) [d-j, d-i-u] [j, u] q^((u+i-j)(u+i-j+2e-1)/2 + C(j-u,2))
/// over max(0, j-i) <= u <= min(d-i, j).
Integer eigenvalue_P_entry(int d, int tau, std::uint64_t q, int i, int j);

struct EigenData {
    int d = 0;
    int tau = 0;
    std::uint64_t q = 0;
    Integer n;
    /// P[r][i]: eigenvalue of A_i on W_r.
    std::vector<std::vector<Integer>> P;
    /// Q = n P^{-1}; Q[i][j] is n times the entry of E_j on an R_i pair.
    std::vector<std::vector<Rational>> Q;
    std::vector<Integer> valencies;
    std::vector<Rational> multiplicities;
};

EigenData eigen_data(Family f, int d, std::uint64_t q);
EigenData eigen_data(int d, int tau, std::uint64_t q);

/// Closed forms for A_{d-s} on W_1 and W_d and its valency, tau = 2.
struct SpectrumTriple {
    Integer lambda_minus;
    Integer lambda_plus;
    Integer k;
};
SpectrumTriple symplectic_spectrum_triple(int d, int s, std::uint64_t q);

/// prod_{i=1}^{d-1} (q^i + 1)
///   <= 2q^d/(q^d+1) (q^C(d,2) - q^C(d-1,2) + 1) + q^(C(d-2,2) + 2(d-2))
/// in exact rationals.
bool generator_growth_check(std::uint64_t q, int d);

} // namespace qcount
} // namespace polarb

#endif
