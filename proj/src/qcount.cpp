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

#include "qcount.hpp"

#include <array>

namespace polarb {

namespace {

constexpr std::array<std::string_view, 6> kFamilyNames = {"Qplus", "Qparabolic", "Qminus", "W", "Hodd", "Heven"};

std::uint64_t isqrt(std::uint64_t v)
{
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

} // namespace

std::string_view family_name(Family f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

std::optional<Family> parse_family(std::string_view name)
{
    for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
        if (kFamilyNames[i] == name)
            return static_cast<Family>(i);
    return std::nullopt;
}

int twice_type(Family f)
{
    switch (f) {
    case Family::Qplus:
        return 0;
    case Family::Hodd:
        return 1;
    case Family::Qparabolic:
    case Family::W:
        return 2;
    case Family::Heven:
        return 3;
    case Family::Qminus:
        return 4;
    }
    return 0;
}

int ambient_dim(Family f, int d)
{
    switch (f) {
    case Family::Qplus:
    case Family::W:
    case Family::Hodd:
        return 2 * d;
    case Family::Qparabolic:
    case Family::Heven:
        return 2 * d + 1;
    case Family::Qminus:
        return 2 * d + 2;
    }
    return 0;
}

bool is_hermitian(Family f) { return f == Family::Hodd || f == Family::Heven; }

bool is_orthogonal(Family f) { return f == Family::Qplus || f == Family::Qparabolic || f == Family::Qminus; }

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q)
{
    if (q < 2)
        return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0)
        ++p;
    unsigned k = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1)
        return std::nullopt;
    return std::pair<unsigned, unsigned>{static_cast<unsigned>(p), k};
}

void check_parameters(Family f, int d, std::uint64_t q)
{
    if (d < 1)
        fail(ErrorCode::invalid_argument, "rank must be at least 1");
    auto pk = prime_power(q);
    if (!pk)
        fail(ErrorCode::invalid_argument, "q = " + std::to_string(q) + " is not a prime power");
    if (is_hermitian(f) && pk->second % 2 != 0)
        fail(ErrorCode::invalid_argument,
             "Hermitian spaces need a square field order, got " + std::to_string(q));
}

namespace qcount {

Integer gaussian(int n, int k, const Integer& q)
{
    if (k < 0 || k > n)
        return 0;
    Integer num = 1;
    Integer den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= boost::multiprecision::pow(q, static_cast<unsigned>(n - i + 1)) - 1;
        den *= boost::multiprecision::pow(q, static_cast<unsigned>(i)) - 1;
    }
    return num / den;
}

HalfPower q_power(int tau, std::uint64_t q, long twice_exp, int sign)
{
    if (tau % 2 != 0) {
        std::uint64_t b = isqrt(q);
        if (b * b != q)
            fail(ErrorCode::invalid_argument, "odd type parameter needs a square q");
        return HalfPower{sign, b, 2 * twice_exp};
    }
    return HalfPower{sign, q, twice_exp};
}

Integer num_generators(Family f, int d, std::uint64_t q)
{
    const int tau = twice_type(f);
    Integer n = 1;
    for (int i = 0; i < d; ++i)
        n *= q_power(tau, q, 2 * i + tau).value() + 1;
    return n;
}

Integer num_points(Family f, int d, std::uint64_t q)
{
    const int tau = twice_type(f);
    return (q_power(tau, q, 2 * (d - 1) + tau).value() + 1) * gaussian(d, 1, q);
}

Integer generators_on_point(Family f, int d, std::uint64_t q) { return num_generators(f, d - 1, q); }

HalfPower disjointness_eigenvalue(int d, int tau, std::uint64_t q, int r)
{
    if (r < 0 || r > d)
        fail(ErrorCode::invalid_argument, "eigenspace index out of range");
    long twice = 2 * (binom2(d - r) + binom2(r)) + static_cast<long>(tau) * (d - r);
    return q_power(tau, q, twice, r % 2 == 0 ? 1 : -1);
}

Integer eigenvalue_P_entry(int d, int tau, std::uint64_t q, int i, int j)
{
    if (i < 0 || i > d || j < 0 || j > d)
        fail(ErrorCode::invalid_argument, "relation or eigenspace index out of range");
    Integer sum = 0;
    const int lo = std::max(0, j - i);
    const int hi = std::min(d - i, j);
    for (int u = lo; u <= hi; ++u) {
        const long m = u + i - j;
        const long twice = m * (m + tau - 1) + 2 * binom2(j - u);
        Integer term = gaussian(d - j, d - i - u, q) * gaussian(j, u, q) * q_power(tau, q, twice).value();
        if ((j + u) % 2 != 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

EigenData eigen_data(Family f, int d, std::uint64_t q)
{
    check_parameters(f, d, q);
    return eigen_data(d, twice_type(f), q);
}

EigenData eigen_data(int d, int tau, std::uint64_t q)
{
    EigenData e;
    e.d = d;
    e.tau = tau;
    e.q = q;
    const auto size = static_cast<std::size_t>(d + 1);
    e.P.assign(size, std::vector<Integer>(size));
    std::vector<std::vector<Rational>> Pr(size, std::vector<Rational>(size));
    for (int r = 0; r <= d; ++r)
        for (int i = 0; i <= d; ++i) {
            e.P[r][i] = eigenvalue_P_entry(d, tau, q, i, r);
            Pr[r][i] = Rational(e.P[r][i]);
        }
    e.valencies = e.P[0];
    e.n = 0;
    for (const auto& v : e.valencies)
        e.n += v;
    auto inv = invert(Pr);
    e.Q.assign(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            e.Q[i][j] = inv[i][j] * e.n;
    e.multiplicities = e.Q[0];
    return e;
}

SpectrumTriple symplectic_spectrum_triple(int d, int s, std::uint64_t q)
{
    if (!(0 < s && s < d))
        fail(ErrorCode::invalid_argument, "symplectic_spectrum_triple needs 0 < s < d");
    const Integer Q(q);
    SpectrumTriple t;
    t.lambda_minus = -gaussian(d - 1, s, Q) * ipow(Q, static_cast<unsigned>(binom2(d - s)))
                     + gaussian(d - 1, s - 1, Q) * ipow(Q, static_cast<unsigned>(binom2(d - s + 1)));
    t.lambda_plus = gaussian(d, s, Q) * ipow(Q, static_cast<unsigned>(binom2(d - s)));
    if ((d - s) % 2 != 0)
        t.lambda_plus = -t.lambda_plus;
    t.k = gaussian(d, s, Q) * ipow(Q, static_cast<unsigned>(binom2(d - s + 1)));
    return t;
}

bool generator_growth_check(std::uint64_t q, int d)
{
    if (q < 2 || d < 1)
        fail(ErrorCode::invalid_argument, "generator_growth_check needs q >= 2 and d >= 1");
    Integer lhs = 1;
    for (int i = 1; i <= d - 1; ++i)
        lhs *= ipow(q, static_cast<unsigned>(i)) + 1;
    const Integer qd = ipow(q, static_cast<unsigned>(d));
    Rational rhs = Rational(2 * qd, qd + 1)
                   * Rational(ipow(q, static_cast<unsigned>(binom2(d))) - ipow(q, static_cast<unsigned>(binom2(d - 1))) + 1);
    rhs += rpow(q, binom2(d - 2) + 2L * (d - 2));
    return Rational(lhs) <= rhs;
}

} // namespace qcount
} // namespace polarb
