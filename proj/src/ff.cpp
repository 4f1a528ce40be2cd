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

#include "ff.hpp"

#include "exact.hpp"

#include <string>

namespace polarb::ff {

bool is_prime(unsigned n)
{
    if (n < 2)
        return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

std::vector<unsigned> digits(unsigned code, unsigned p, unsigned k)
{
    std::vector<unsigned> out(k);
    for (unsigned i = 0; i < k; ++i) {
        out[i] = code % p;
        code /= p;
    }
    return out;
}

unsigned undigits(const std::vector<unsigned>& ds, unsigned p)
{
    unsigned code = 0;
    for (std::size_t i = ds.size(); i-- > 0;)
        code = code * p + ds[i];
    return code;
}

// Product of two polynomials of degree < k reduced modulo the monic
// polynomial `mod` of degree k, all coefficients in GF(p).
std::vector<unsigned> mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                             const std::vector<unsigned>& mod, unsigned p)
{
    const std::size_t k = mod.size() - 1;
    std::vector<unsigned> prod(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t top = 2 * k - 1; top >= k; --top) {
        unsigned c = prod[top];
        if (c != 0) {
            for (std::size_t i = 0; i <= k; ++i) {
                std::size_t pos = top - k + i;
                prod[pos] = (prod[pos] + (p - c) * mod[i]) % p;
            }
        }
        if (top == k)
            break;
    }
    prod.resize(k);
    return prod;
}

// A polynomial of degree k <= 3 is irreducible iff it has no root; for
// larger k we additionally trial-divide by every monic polynomial of degree
// 2..k/2.
bool irreducible(const std::vector<unsigned>& mod, unsigned p)
{
    const std::size_t k = mod.size() - 1;
    if (k == 1)
        return true;
    if (mod[0] == 0)
        return false;
    for (unsigned x = 0; x < p; ++x) {
        unsigned v = 0;
        for (std::size_t i = k + 1; i-- > 0;)
            v = (v * x + mod[i]) % p;
        if (v == 0)
            return false;
    }
    if (k <= 3)
        return true;
    for (std::size_t deg = 2; deg <= k / 2; ++deg) {
        unsigned count = 1;
        for (std::size_t i = 0; i < deg; ++i)
            count *= p;
        for (unsigned c = 0; c < count; ++c) {
            std::vector<unsigned> g = digits(c, p, static_cast<unsigned>(deg));
            g.push_back(1);
            // long division of mod by g
            std::vector<unsigned> r = mod;
            for (std::size_t top = k; top >= deg; --top) {
                unsigned lead = r[top];
                if (lead != 0)
                    for (std::size_t i = 0; i <= deg; ++i) {
                        std::size_t pos = top - deg + i;
                        r[pos] = (r[pos] + (p - lead) * g[i]) % p;
                    }
                if (top == deg)
                    break;
            }
            bool zero = true;
            for (std::size_t i = 0; i < deg; ++i)
                zero = zero && r[i] == 0;
            if (zero)
                return false;
        }
    }
    return true;
}

} // namespace

Field::Field(unsigned p, unsigned k) : p_(p), k_(k)
{
    if (!is_prime(p))
        fail(ErrorCode::invalid_argument, "field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0)
        fail(ErrorCode::invalid_argument, "field degree must be at least 1");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < k; ++i) {
        order *= p;
        if (order > (1u << 16))
            fail(ErrorCode::invalid_argument, "field order exceeds 2^16");
    }
    order_ = static_cast<unsigned>(order);
    if (k % 2 == 0) {
        sqrt_order_ = 1;
        for (unsigned i = 0; i < k / 2; ++i)
            sqrt_order_ *= p;
    }

    for (unsigned c = 0; c < order_; ++c) {
        std::vector<unsigned> cand = digits(c, p, k);
        cand.push_back(1);
        if (irreducible(cand, p)) {
            modulus_ = cand;
            break;
        }
    }
    if (modulus_.empty())
        fail(ErrorCode::internal, "no irreducible polynomial found");

    neg_.resize(order_);
    for (unsigned a = 0; a < order_; ++a) {
        std::vector<unsigned> ds = digits(a, p, k);
        for (auto& v : ds)
            v = (p - v) % p;
        neg_[a] = static_cast<Elem>(undigits(ds, p));
    }
    if (p != 2 && order_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(order_) * order_);
        for (unsigned a = 0; a < order_; ++a)
            for (unsigned b = 0; b < order_; ++b)
                add_table_[static_cast<std::size_t>(a) * order_ + b] = add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
    }

    // Find the smallest primitive element by direct powering.
    exp_.assign(order_ - 1, 0);
    log_.assign(order_, 0);
    for (unsigned g = 1; g < order_; ++g) {
        std::vector<unsigned> gd = digits(g, p, k);
        std::vector<unsigned> cur = digits(1, p, k);
        std::vector<bool> seen(order_, false);
        unsigned steps = 0;
        bool ok = true;
        for (; steps < order_ - 1; ++steps) {
            unsigned code = undigits(cur, p);
            if (seen[code]) {
                ok = false;
                break;
            }
            seen[code] = true;
            exp_[steps] = static_cast<Elem>(code);
            log_[code] = steps;
            cur = mulmod(cur, gd, modulus_, p);
        }
        if (ok && undigits(cur, p) == 1) {
            primitive_ = static_cast<Elem>(g);
            return;
        }
    }
    fail(ErrorCode::internal, "no primitive element found");
}

Elem Field::add_slow(Elem a, Elem b) const
{
    unsigned out = 0;
    unsigned scale = 1;
    unsigned x = a;
    unsigned y = b;
    for (unsigned i = 0; i < k_; ++i) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::inv(Elem a) const
{
    if (a == 0)
        fail(ErrorCode::invalid_argument, "inverse of zero");
    unsigned l = log_[a];
    return exp_[l == 0 ? 0 : order_ - 1 - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const
{
    if (a == 0)
        return e == 0 ? 1 : 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (order_ - 1))) % (order_ - 1)];
}

Elem Field::conjugate(Elem a) const
{
    if (!is_square_order())
        fail(ErrorCode::invalid_argument, "conjugation needs a field of square order");
    return pow(a, sqrt_order_);
}

unsigned Field::element_order(Elem a) const
{
    if (a == 0)
        fail(ErrorCode::invalid_argument, "zero has no multiplicative order");
    Elem x = a;
    unsigned n = 1;
    while (x != 1) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

Elem Field::from_int(long n) const
{
    long r = n % static_cast<long>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Elem>(r);
}

} // namespace polarb::ff
