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

#ifndef POLARB_EXACT_HPP
#define POLARB_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polarb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

enum class ErrorCode {
    invalid_argument = 1,
    limit_exceeded = 2,
    io = 3,
    format = 4,
    verification = 5,
    internal = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline Integer ipow(const Integer& base, unsigned exp)
{
    return boost::multiprecision::pow(base, exp);
}

inline Integer ipow(std::uint64_t base, unsigned exp) { return ipow(Integer(base), exp); }

/// Rational power with a possibly negative exponent.
inline Rational rpow(std::uint64_t base, long exp)
{
    if (exp >= 0)
        return Rational(ipow(base, static_cast<unsigned>(exp)));
    return Rational(Integer(1), ipow(base, static_cast<unsigned>(-exp)));
}

inline long binom2(long n) { return n * (n - 1) / 2; }

/// Exact value sign * base^(twice_exp / 2).
///
/// The doubled exponent lets the type parameter e in {0, 1/2, 1, 3/2, 2}
/// enter every exponent as an integer. For Hermitian spaces the base is the
/// square root of the field order.
struct HalfPower {
    int sign = 1;
    std::uint64_t base = 1;
    long twice_exp = 0;

    bool integral() const { return sign == 0 || twice_exp % 2 == 0; }

    Integer value() const
    {
        if (sign == 0)
            return 0;
        if (twice_exp < 0 || twice_exp % 2 != 0)
            fail(ErrorCode::internal, "HalfPower does not materialize to an integer");
        Integer v = ipow(base, static_cast<unsigned>(twice_exp / 2));
        return sign < 0 ? Integer(-v) : v;
    }

    friend bool operator==(const HalfPower&, const HalfPower&) = default;
};

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
std::string numerator_string(const Rational& v);
std::string denominator_string(const Rational& v);

/// Decimal rendering with a fixed number of fractional digits (truncated
/// toward zero after rounding half away from zero).
std::string to_decimal(const Rational& v, int digits = 6);
double to_double(const Rational& v);

/// Exact inverse by Gauss-Jordan elimination over the rationals.
/// Throws ErrorCode::internal when the matrix is singular.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m);

} // namespace polarb

#endif
