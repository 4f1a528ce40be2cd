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

#ifndef POLARB_CACHE_HPP
#define POLARB_CACHE_HPP

#include "geom.hpp"
#include "qcount.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace polarb::cache {

// Binary catalog file, all integers little-endian:
//
//   magic     7 bytes  "POLARB1"
//   family    u8       0 Qplus, 1 Qparabolic, 2 Qminus, 3 W, 4 Hodd, 5 Heven
//   d         u8
//   p         u32      characteristic
//   k         u8       field degree (q = p^k)
//   count     u64      number of generators
//   width     u32      bytes per generator
//   count x width      generators
//   relflag   u8       1 if a relation section follows, else 0
//   count^2 bytes      codim(g_i ∩ g_j), row-major (only when relflag = 1)
//
// A generator is its d x (ambient) reduced echelon basis read row-major as
// the digits of a base-q integer (first entry least significant), where a
// field element contributes its code; equivalently a base-p digit string.
// It is stored in `width` bytes, the minimum that holds q^(d*ambient) - 1.

inline constexpr char kMagic[] = "POLARB1";

struct Descriptor {
    Family family = Family::W;
    int d = 0;
    unsigned p = 0;
    unsigned k = 0;

    static Descriptor of(Family f, int d, std::uint64_t q);
    std::uint64_t q() const;
    std::string describe() const;
    friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

struct Contents {
    geom::GeneratorCatalog catalog;
    /// Row-major codimension table when the file carries one.
    std::optional<std::vector<std::uint8_t>> codims;
};

std::vector<std::uint8_t> encode(const geom::GeneratorCatalog& cat, const std::vector<std::uint8_t>* codims = nullptr);
/// Throws ErrorCode::format on a bad header, descriptor mismatch, truncated
/// or trailing data, or a body that is not a canonical generator list.
Contents decode(const std::vector<std::uint8_t>& bytes, const Descriptor& expected);

void write(const std::filesystem::path& path, const geom::GeneratorCatalog& cat,
           const std::vector<std::uint8_t>* codims = nullptr);
Contents read(const std::filesystem::path& path, const Descriptor& expected);

/// $POLARB_CACHE_DIR, or ./.polarb-cache.
std::filesystem::path default_dir();
std::filesystem::path file_for(const std::filesystem::path& dir, const Descriptor& desc);

/// Reads the cached catalog for `ps` from `dir`, or enumerates and writes it.
Contents load_or_build(const geom::PolarSpace& ps, const std::filesystem::path& dir, bool* from_cache = nullptr,
                       std::uint64_t limit = geom::kDefaultGeneratorLimit);

} // namespace polarb::cache

#endif
