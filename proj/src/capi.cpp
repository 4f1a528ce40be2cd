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

#include "polarb/polarb.h"

#include "cache.hpp"
#include "geom.hpp"
#include "scheme.hpp"
#include "shell.hpp"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

using namespace polarb;

struct polarb_space {
    Family family;
    int d;
    std::uint64_t q;
    geom::PolarSpace ps;
};

struct polarb_catalog {
    geom::GeneratorCatalog cat;
    std::optional<std::vector<std::uint8_t>> codims;
};

namespace {

thread_local std::string last_error;

polarb_status status_of(ErrorCode c)
{
    return static_cast<polarb_status>(static_cast<int>(c));
}

template <class F>
polarb_status guarded(F&& f)
{
    try {
        last_error.clear();
        f();
        return POLARB_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return POLARB_ERR_LIMIT_EXCEEDED;
    } catch (const std::filesystem::filesystem_error& e) {
        last_error = e.what();
        return POLARB_ERR_IO;
    } catch (const std::exception& e) {
        last_error = e.what();
        return POLARB_ERR_INTERNAL;
    }
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what)
{
    if (!p)
        fail(ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

Family family_arg(const char* name)
{
    require(name, "family");
    const auto f = parse_family(name);
    if (!f)
        fail(ErrorCode::invalid_argument, std::string("unknown family '") + name + "'");
    return *f;
}

std::filesystem::path dir_arg(const char* dir)
{
    return dir ? std::filesystem::path(dir) : cache::default_dir();
}

void emit(const shell::json& j, char** out)
{
    require(out, "out");
    *out = dup(j.dump(2));
}

} // namespace

extern "C" {

const char* polarb_version(void)
{
    return "1.0.0";
}

const char* polarb_last_error(void)
{
    return last_error.c_str();
}

const char* polarb_status_name(polarb_status status)
{
    switch (status) {
    case POLARB_OK:
        return "ok";
    case POLARB_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case POLARB_ERR_LIMIT_EXCEEDED:
        return "limit exceeded";
    case POLARB_ERR_IO:
        return "i/o error";
    case POLARB_ERR_FORMAT:
        return "format error";
    case POLARB_ERR_VERIFICATION:
        return "verification failed";
    case POLARB_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void polarb_string_free(char* s)
{
    std::free(s);
}

polarb_status polarb_space_create(const char* family, int d, uint64_t q, polarb_space** out)
{
    return guarded([&] {
        require(out, "out");
        const Family f = family_arg(family);
        check_parameters(f, d, q);
        *out = new polarb_space{f, d, q, geom::PolarSpace::make(f, d, q)};
    });
}

void polarb_space_destroy(polarb_space* space)
{
    delete space;
}

polarb_status polarb_space_describe(const polarb_space* space, char** out)
{
    return guarded([&] {
        require(space, "space");
        require(out, "out");
        *out = dup(space->ps.describe());
    });
}

polarb_status polarb_catalog_build(const polarb_space* space, uint64_t limit, polarb_catalog** out)
{
    return guarded([&] {
        require(space, "space");
        require(out, "out");
        auto cat = geom::GeneratorCatalog::enumerate(space->ps, limit ? limit : geom::kDefaultGeneratorLimit);
        *out = new polarb_catalog{std::move(cat), std::nullopt};
    });
}

polarb_status polarb_catalog_load_or_build(const polarb_space* space, const char* cache_dir, int* from_cache,
                                           polarb_catalog** out)
{
    return guarded([&] {
        require(space, "space");
        require(out, "out");
        bool hit = false;
        auto c = cache::load_or_build(space->ps, dir_arg(cache_dir), &hit);
        if (from_cache)
            *from_cache = hit ? 1 : 0;
        *out = new polarb_catalog{std::move(c.catalog), std::move(c.codims)};
    });
}

polarb_status polarb_catalog_save(const polarb_catalog* catalog, const char* path, int with_relations)
{
    return guarded([&] {
        require(catalog, "catalog");
        require(path, "path");
        std::optional<std::vector<std::uint8_t>> codims = catalog->codims;
        if (with_relations && !codims)
            codims = scheme::build_relations(catalog->cat).codim;
        cache::write(path, catalog->cat, with_relations ? &*codims : nullptr);
    });
}

polarb_status polarb_catalog_load(const polarb_space* space, const char* path, polarb_catalog** out)
{
    return guarded([&] {
        require(space, "space");
        require(path, "path");
        require(out, "out");
        auto c = cache::read(path, cache::Descriptor::of(space->family, space->d, space->q));
        *out = new polarb_catalog{std::move(c.catalog), std::move(c.codims)};
    });
}

void polarb_catalog_destroy(polarb_catalog* catalog)
{
    delete catalog;
}

size_t polarb_catalog_size(const polarb_catalog* catalog)
{
    return catalog ? catalog->cat.size() : 0;
}

polarb_status polarb_catalog_codim(const polarb_catalog* catalog, size_t i, size_t j, int* out)
{
    return guarded([&] {
        require(catalog, "catalog");
        require(out, "out");
        if (i >= catalog->cat.size() || j >= catalog->cat.size())
            fail(ErrorCode::invalid_argument, "generator index out of range");
        *out = catalog->cat.codim_fast(i, j);
    });
}

polarb_status polarb_info_json(const polarb_space* space, char** out)
{
    return guarded([&] {
        require(space, "space");
        emit(shell::info(space->family, space->d, space->q), out);
    });
}

polarb_status polarb_enum_json(const polarb_space* space, const char* cache_dir, char** out)
{
    return guarded([&] {
        require(space, "space");
        emit(shell::enumerate(space->family, space->d, space->q, dir_arg(cache_dir)), out);
    });
}

polarb_status polarb_scheme_json(const polarb_space* space, const char* cache_dir, int* ok, char** out)
{
    return guarded([&] {
        require(space, "space");
        const auto j = shell::scheme(space->family, space->d, space->q, dir_arg(cache_dir));
        if (ok)
            *ok = j.value("ok", false) ? 1 : 0;
        emit(j, out);
    });
}

polarb_status polarb_bound_json(const char* kind, const polarb_space* space, int d, uint64_t q, char** out)
{
    return guarded([&] {
        require(kind, "kind");
        const std::string k = kind;
        if (k == "classical") {
            require(space, "space");
            emit(shell::bound_classical(space->family, space->d, space->q), out);
        } else if (k == "hermitian-cross") {
            emit(shell::bound_hermitian_cross(d, q), out);
        } else if (k == "hermitian-ekr") {
            emit(shell::bound_hermitian_ekr(d, q), out);
        } else {
            fail(ErrorCode::invalid_argument, "unknown bound kind '" + k + "'");
        }
    });
}

polarb_status polarb_search_max_pairs_json(const polarb_space* space, unsigned limit, char** out)
{
    return guarded([&] {
        require(space, "space");
        emit(shell::search_max_pairs(space->family, space->d, space->q, limit ? limit : 22u), out);
    });
}

size_t polarb_check_count(void)
{
    return shell::check_ids().size();
}

const char* polarb_check_id(size_t index)
{
    const auto& ids = shell::check_ids();
    return index < ids.size() ? ids[index].c_str() : nullptr;
}

polarb_status polarb_verify_json(const char* check_id, const char* family, int d, uint64_t q, int* passed, char** out)
{
    return guarded([&] {
        require(check_id, "check_id");
        shell::CheckParams p;
        if (family)
            p.family = family_arg(family);
        if (d > 0)
            p.d = d;
        if (q > 0)
            p.q = q;
        const auto j = shell::run_check(check_id, p);
        if (passed)
            *passed = shell::passed(j) ? 1 : 0;
        emit(j, out);
    });
}

polarb_status polarb_summary_json(int d, uint64_t q, char** out)
{
    return guarded([&] { emit(shell::summary(d, q), out); });
}

} // extern "C"
