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
#include "scheme.hpp"
#include "shell.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace polarb;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    auto dir = fs::temp_directory_path() / ("polarb-test-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("cache round trip")
{
    const auto ps = geom::PolarSpace::make(Family::Qplus, 4, 2);
    const auto cat = geom::GeneratorCatalog::enumerate(ps);
    const auto desc = cache::Descriptor::of(Family::Qplus, 4, 2);
    const auto bytes = cache::encode(cat);
    CHECK(std::string(bytes.begin(), bytes.begin() + 7) == "POLARB1");
    const auto back = cache::decode(bytes, desc);
    CHECK(back.catalog.generators() == cat.generators());
    CHECK_FALSE(back.codims.has_value());
    CHECK(cache::encode(back.catalog) == bytes);

    const auto rel = scheme::build_relations(cat);
    const auto with = cache::encode(cat, &rel.codim);
    const auto back2 = cache::decode(with, desc);
    REQUIRE(back2.codims.has_value());
    CHECK(*back2.codims == rel.codim);
    CHECK(cache::encode(back2.catalog, &*back2.codims) == with);
}

TEST_CASE("cache header layout")
{
    const auto cat = geom::GeneratorCatalog::enumerate(geom::PolarSpace::make(Family::Hodd, 2, 4));
    const auto b = cache::encode(cat);
    CHECK(b[7] == 4); // Hodd
    CHECK(b[8] == 2);
    CHECK(b[9] == 2); // p
    CHECK(b[13] == 2); // k
    CHECK(b[14] == 27);
    // 2 x 4 entries over GF(4): 16 bits.
    CHECK(b[22] == 2);
    CHECK(b.size() == 26 + 27 * 2 + 1);
}

TEST_CASE("cache errors")
{
    const auto cat = geom::GeneratorCatalog::enumerate(geom::PolarSpace::make(Family::W, 2, 3));
    const auto desc = cache::Descriptor::of(Family::W, 2, 3);
    const auto bytes = cache::encode(cat);
    auto code = [&](const std::vector<std::uint8_t>& b, const cache::Descriptor& d) {
        try {
            cache::decode(b, d);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::internal;
    };
    CHECK(code(bytes, cache::Descriptor::of(Family::W, 2, 2)) == ErrorCode::format);
    CHECK(code(bytes, cache::Descriptor::of(Family::Qparabolic, 2, 3)) == ErrorCode::format);
    auto bad = bytes;
    bad[0] = 'X';
    CHECK(code(bad, desc) == ErrorCode::format);
    bad = bytes;
    bad.resize(bytes.size() - 5);
    CHECK(code(bad, desc) == ErrorCode::format);
    bad = bytes;
    bad.push_back(0);
    CHECK(code(bad, desc) == ErrorCode::format);
    bad = bytes;
    std::swap(bad[26], bad[28]);
    std::swap(bad[27], bad[29]);
    CHECK(code(bad, desc) == ErrorCode::format);
}

TEST_CASE("cache directory and load_or_build")
{
    const auto dir = scratch("cache");
    ::setenv("POLARB_CACHE_DIR", dir.c_str(), 1);
    CHECK(cache::default_dir() == dir);
    ::unsetenv("POLARB_CACHE_DIR");
    CHECK(cache::default_dir() == fs::path(".polarb-cache"));

    const auto ps = geom::PolarSpace::make(Family::Qparabolic, 2, 3);
    bool hit = true;
    const auto a = cache::load_or_build(ps, dir, &hit);
    CHECK_FALSE(hit);
    const auto b = cache::load_or_build(ps, dir, &hit);
    CHECK(hit);
    CHECK(a.catalog.generators() == b.catalog.generators());
    CHECK_THROWS_AS(cache::read(dir / "missing.cat", cache::Descriptor::of(Family::W, 2, 2)), Error);
    fs::remove_all(dir);
}

TEST_CASE("reports")
{
    const auto info = shell::info(Family::W, 2, 3);
    CHECK(info["generators"] == "40");
    CHECK(info["classical_bound"]["bound"]["num"] == "4");

    CHECK(shell::bound_classical(Family::Qplus, 4, 2)["bound"]["num"] == "135");
    const auto h = shell::bound_hermitian_cross(3, 2);
    CHECK(h["bound"]["num"] == "747");
    CHECK(h["bound"]["den"] == "11");
    CHECK(shell::bound_hermitian_cross(2, 2)["bound"].is_null());
    CHECK(shell::bound_hermitian_ekr(3, 2)["bound"]["num"] == "57");

    const auto s = shell::search_max_pairs(Family::Hodd, 2, 4, 22);
    CHECK(s["max_product"] == 11);
    CHECK(s["maximal_pairs"] == 649);

    const auto dir = scratch("scheme");
    const auto sc = shell::scheme(Family::Hodd, 2, 4, dir);
    CHECK(sc["ok"] == true);
    // The second run reads the relation section written by the first.
    CHECK(shell::scheme(Family::Hodd, 2, 4, dir) == sc);
    fs::remove_all(dir);
}

TEST_CASE("check reports follow the schema and are deterministic")
{
    for (const auto& id : {"thm20", "lemma13", "q-col-signs"}) {
        const auto a = shell::run_check(id, {});
        const auto b = shell::run_check(id, {});
        CHECK(a.dump() == b.dump());
        std::vector<std::string> keys;
        for (const auto& [k, v] : a.items())
            keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"check_id", "space", "status", "details", "exact", "float"});
        CHECK(shell::passed(a));
    }
    CHECK_THROWS_AS(shell::run_check("nope", {}), Error);
    CHECK(shell::check_ids().size() == 11);
}

TEST_CASE("checks with parameters")
{
    shell::CheckParams p;
    p.q = 3;
    CHECK(shell::passed(shell::run_check("thm16", p)));
    p.q = 2;
    CHECK(shell::passed(shell::run_check("thm16", p)));
    shell::CheckParams w;
    w.family = Family::W;
    CHECK(shell::passed(shell::run_check("prop10", w)));
    shell::CheckParams bad;
    bad.family = Family::Hodd;
    CHECK_THROWS_AS(shell::run_check("thm7", bad), Error);
}

TEST_CASE("summary rows")
{
    const auto s = shell::summary(4, 2);
    CHECK(s["rows"][0]["max_sqrt_product"]["num"] == "135");
    bool found = false;
    for (const auto& r : s["rows"])
        if (r["space"] == "H(5,4)") {
            found = true;
            CHECK(r["max_sqrt_product"]["num"] == "747");
        }
    CHECK(found);
}
