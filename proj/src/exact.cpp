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

#include "exact.hpp"

#include <cmath>
#include <utility>

namespace polarb {

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v)
{
    if (boost::multiprecision::denominator(v) == 1)
        return numerator_string(v);
    return numerator_string(v) + "/" + denominator_string(v);
}

std::string numerator_string(const Rational& v) { return boost::multiprecision::numerator(v).str(); }

std::string denominator_string(const Rational& v) { return boost::multiprecision::denominator(v).str(); }

std::string to_decimal(const Rational& v, int digits)
{
    Integer scale = ipow(10, static_cast<unsigned>(digits));
    Integer num = boost::multiprecision::numerator(v);
    Integer den = boost::multiprecision::denominator(v);
    bool negative = num < 0;
    if (negative)
        num = -num;
    Integer scaled = (num * scale * 2 + den) / (den * 2);
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string out = negative && scaled != 0 ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n)
            fail(ErrorCode::invalid_argument, "invert: matrix is not square");
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            fail(ErrorCode::internal, "invert: singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= scale;
            inv[col][j] /= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            const Rational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace polarb
