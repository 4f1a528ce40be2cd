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

#ifndef POLARB_BITS_HPP
#define POLARB_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace polarb {

/// Fixed-length bit row packed into 64-bit words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static Bitset full(std::size_t n)
    {
        Bitset b(n);
        for (std::size_t i = 0; i < n; ++i)
            b.set(i);
        return b;
    }

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    /// Index of the lowest set bit, or size() when empty.
    std::size_t first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return size_;
    }
    /// Index of the lowest set bit strictly above i, or size().
    std::size_t next(std::size_t i) const
    {
        ++i;
        if (i >= size_)
            return size_;
        std::size_t w = i >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (word)
                return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
            if (++w == words_.size())
                return size_;
            word = words_[w];
        }
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    Bitset complement() const
    {
        Bitset b(size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            b.words_[i] = ~words_[i];
        if (size_ & 63)
            b.words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
        return b;
    }
    bool is_subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = first(); i < size_; i = next(i))
            out.push_back(i);
        return out;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;
    friend auto operator<=>(const Bitset& a, const Bitset& b) { return a.words_ <=> b.words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t and_count(const Bitset& a, const Bitset& b)
{
    std::size_t c = 0;
    const auto& x = a.words();
    const auto& y = b.words();
    for (std::size_t i = 0; i < x.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(x[i] & y[i]));
    return c;
}

} // namespace polarb

#endif
