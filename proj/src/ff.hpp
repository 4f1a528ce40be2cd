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

#ifndef POLARB_FF_HPP
#define POLARB_FF_HPP

#include <cstdint>
#include <vector>

namespace polarb::ff {

using Elem = std::uint16_t;

/// GF(p^k) with elements encoded as integers in the polynomial basis:
/// the code of a_0 + a_1 x + ... + a_{k-1} x^{k-1} is sum a_i p^i.
///
/// The defining polynomial is the monic irreducible polynomial of degree k
/// with the smallest code; the primitive element is the smallest code of
/// multiplicative order p^k - 1. Multiplication and inversion go through
/// exponential/logarithm tables.
class Field {
public:
    Field(unsigned p, unsigned k);

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    unsigned order() const noexcept { return order_; }
    /// Coefficients c_0..c_k (c_k = 1) of the defining polynomial.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    Elem primitive() const noexcept { return primitive_; }

    Elem add(Elem a, Elem b) const
    {
        if (p_ == 2)
            return static_cast<Elem>(a ^ b);
        if (!add_table_.empty())
            return add_table_[static_cast<std::size_t>(a) * order_ + b];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        unsigned s = log_[a] + log_[b];
        if (s >= order_ - 1)
            s -= order_ - 1;
        return exp_[s];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    bool is_square_order() const noexcept { return k_ % 2 == 0; }
    /// sqrt(order); only meaningful when is_square_order().
    unsigned sqrt_order() const noexcept { return sqrt_order_; }
    /// x -> x^sqrt(order), the involutory automorphism. Throws when the
    /// order is not a square.
    Elem conjugate(Elem a) const;

    /// Multiplicative order of a non-zero element.
    unsigned element_order(Elem a) const;

    /// The element 1 + 1 + ... (n times).
    Elem from_int(long n) const;

private:
    Elem add_slow(Elem a, Elem b) const;

    unsigned p_;
    unsigned k_;
    unsigned order_;
    unsigned sqrt_order_ = 0;
    std::vector<unsigned> modulus_;
    Elem primitive_ = 1;
    std::vector<Elem> exp_;
    std::vector<unsigned> log_;
    std::vector<Elem> neg_;
    std::vector<Elem> add_table_;
};

bool is_prime(unsigned n);

} // namespace polarb::ff

#endif
