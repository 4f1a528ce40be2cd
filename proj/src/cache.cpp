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

#include "cache.hpp"

#include "exact.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <iterator>

namespace polarb::cache {

namespace {

constexpr std::array<Family, 6> kFamilyCodes{Family::Qplus, Family::Qparabolic, Family::Qminus,
                                             Family::W,     Family::Hodd,       Family::Heven};

std::uint8_t family_code(Family f)
{
    for (std::size_t i = 0; i < kFamilyCodes.size(); ++i)
        if (kFamilyCodes[i] == f)
            return static_cast<std::uint8_t>(i);
    fail(ErrorCode::internal, "unknown family");
}

std::size_t generator_width(const Descriptor& desc)
{
    const int nv = ambient_dim(desc.family, desc.d);
    Integer top = ipow(Integer(desc.q()), static_cast<unsigned>(desc.d * nv)) - 1;
    std::size_t w = 0;
    while (top > 0) {
        top >>= 8;
        ++w;
    }
    return w;
}

void put(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes)
{
    for (int i = 0; i < bytes; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
public:
    explicit Reader(const std::vector<std::uint8_t>& b) : b_(b) {}
    std::uint64_t get(int bytes)
    {
        need(static_cast<std::size_t>(bytes));
        std::uint64_t v = 0;
        for (int i = 0; i < bytes; ++i)
            v |= std::uint64_t{b_[pos_++]} << (8 * i);
        return v;
    }
    const std::uint8_t* take(std::size_t n)
    {
        need(n);
        const auto* p = b_.data() + pos_;
        pos_ += n;
        return p;
    }
    bool done() const { return pos_ == b_.size(); }

private:
    void need(std::size_t n) const
    {
        if (b_.size() - pos_ < n)
            fail(ErrorCode::format, "cache file is truncated");
    }
    const std::vector<std::uint8_t>& b_;
    std::size_t pos_ = 0;
};

} // namespace

Descriptor Descriptor::of(Family f, int d, std::uint64_t q)
{
    const auto pk = prime_power(q);
    if (!pk)
        fail(ErrorCode::invalid_argument, std::to_string(q) + " is not a prime power");
    return {f, d, pk->first, pk->second};
}

std::uint64_t Descriptor::q() const
{
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i)
        q *= p;
    return q;
}

std::string Descriptor::describe() const
{
    return std::string(family_name(family)) + "-" + std::to_string(d) + "-" + std::to_string(q());
}

std::vector<std::uint8_t> encode(const geom::GeneratorCatalog& cat, const std::vector<std::uint8_t>* codims)
{
    const auto& ps = cat.space();
    const auto desc = Descriptor::of(ps.family(), ps.rank(), ps.q());
    const std::size_t width = generator_width(desc);
    const std::size_t n = cat.size();

    std::vector<std::uint8_t> out(kMagic, kMagic + 7);
    put(out, family_code(desc.family), 1);
    put(out, static_cast<std::uint64_t>(desc.d), 1);
    put(out, desc.p, 4);
    put(out, desc.k, 1);
    put(out, n, 8);
    put(out, width, 4);
    for (const auto& g : cat.generators()) {
        Integer v = 0;
        for (auto row = g.basis().rbegin(); row != g.basis().rend(); ++row)
            for (auto e = row->rbegin(); e != row->rend(); ++e)
                v = v * desc.q() + *e;
        for (std::size_t i = 0; i < width; ++i) {
            out.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(v & 0xff)));
            v >>= 8;
        }
    }
    if (codims) {
        if (codims->size() != n * n)
            fail(ErrorCode::invalid_argument, "relation table has the wrong size");
        out.push_back(1);
        out.insert(out.end(), codims->begin(), codims->end());
    } else {
        out.push_back(0);
    }
    return out;
}

Contents decode(const std::vector<std::uint8_t>& bytes, const Descriptor& expected)
{
    Reader r(bytes);
    const auto* magic = r.take(7);
    if (!std::equal(magic, magic + 7, kMagic))
        fail(ErrorCode::format, "not a catalog file (bad magic)");
    const auto fam = r.get(1);
    if (fam >= kFamilyCodes.size())
        fail(ErrorCode::format, "unknown family code " + std::to_string(fam));
    Descriptor desc;
    desc.family = kFamilyCodes[fam];
    desc.d = static_cast<int>(r.get(1));
    desc.p = static_cast<unsigned>(r.get(4));
    desc.k = static_cast<unsigned>(r.get(1));
    if (!(desc == expected))
        fail(ErrorCode::format, "descriptor mismatch: file holds " + desc.describe() + ", expected " + expected.describe());
    const auto n = r.get(8);
    const auto width = r.get(4);
    if (width != generator_width(desc))
        fail(ErrorCode::format, "generator width " + std::to_string(width) + " does not match the descriptor");
    if (Integer(n) != qcount::num_generators(desc.family, desc.d, desc.q()))
        fail(ErrorCode::format, "generator count " + std::to_string(n) + " does not match the descriptor");

    const auto ps = geom::PolarSpace::make(desc.family, desc.d, desc.q());
    const int nv = ps.ambient();
    std::vector<geom::Subspace> gens;
    gens.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto* p = r.take(width);
        Integer v = 0;
        for (std::size_t b = width; b-- > 0;)
            v = (v << 8) | p[b];
        geom::Matrix rows(desc.d, geom::Vec(nv));
        for (auto& row : rows)
            for (auto& e : row) {
                e = static_cast<geom::Elem>(static_cast<unsigned>(v % desc.q()));
                v /= desc.q();
            }
        geom::Subspace s(ps.field(), nv, rows);
        if (s.basis() != rows)
            fail(ErrorCode::format, "entry " + std::to_string(i) + " is not a reduced echelon basis");
        gens.push_back(std::move(s));
    }
    Contents c{geom::GeneratorCatalog::from_list(ps, std::move(gens)), std::nullopt};
    const auto flag = r.get(1);
    if (flag == 1) {
        const auto* p = r.take(n * n);
        std::vector<std::uint8_t> codims(p, p + n * n);
        for (auto x : codims)
            if (x > desc.d)
                fail(ErrorCode::format, "relation entry out of range");
        c.codims = std::move(codims);
    } else if (flag != 0) {
        fail(ErrorCode::format, "bad relation flag");
    }
    if (!r.done())
        fail(ErrorCode::format, "trailing bytes after catalog");
    return c;
}

void write(const std::filesystem::path& path, const geom::GeneratorCatalog& cat, const std::vector<std::uint8_t>* codims)
{
    const auto bytes = encode(cat, codims);
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            fail(ErrorCode::io, "cannot write " + tmp);
        f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!f)
            fail(ErrorCode::io, "short write to " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

Contents read(const std::filesystem::path& path, const Descriptor& expected)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        fail(ErrorCode::io, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return decode(bytes, expected);
}

std::filesystem::path default_dir()
{
    if (const char* env = std::getenv("POLARB_CACHE_DIR"); env && *env)
        return env;
    return ".polarb-cache";
}

std::filesystem::path file_for(const std::filesystem::path& dir, const Descriptor& desc)
{
    return dir / (desc.describe() + ".cat");
}

Contents load_or_build(const geom::PolarSpace& ps, const std::filesystem::path& dir, bool* from_cache,
                       std::uint64_t limit)
{
    const auto desc = Descriptor::of(ps.family(), ps.rank(), ps.q());
    const auto path = file_for(dir, desc);
    if (std::filesystem::exists(path)) {
        if (from_cache)
            *from_cache = true;
        return read(path, desc);
    }
    if (from_cache)
        *from_cache = false;
    Contents c{geom::GeneratorCatalog::enumerate(ps, limit), std::nullopt};
    write(path, c.catalog);
    return c;
}

} // namespace polarb::cache
