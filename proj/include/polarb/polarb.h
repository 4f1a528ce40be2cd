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

#ifndef POLARB_POLARB_H
#define POLARB_POLARB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(POLARB_BUILDING)
#define POLARB_API __attribute__((visibility("default")))
#else
#define POLARB_API
#endif

/* Status codes. Every fallible call returns one of these; the message of
 * the most recent failure on the calling thread is in polarb_last_error(). */
typedef enum polarb_status {
    POLARB_OK = 0,
    POLARB_ERR_INVALID_ARGUMENT = 1,
    POLARB_ERR_LIMIT_EXCEEDED = 2,
    POLARB_ERR_IO = 3,
    POLARB_ERR_FORMAT = 4,
    POLARB_ERR_VERIFICATION = 5,
    POLARB_ERR_INTERNAL = 6
} polarb_status;

/* A polar space: family, rank and field order. */
typedef struct polarb_space polarb_space;
/* The generators of a polar space in canonical order. */
typedef struct polarb_catalog polarb_catalog;

POLARB_API const char* polarb_version(void);
/* Never NULL; empty when the last call on this thread succeeded. */
POLARB_API const char* polarb_last_error(void);
POLARB_API const char* polarb_status_name(polarb_status status);

/* Strings returned through char** out-parameters are owned by the caller. */
POLARB_API void polarb_string_free(char* s);

/* family: "Qplus", "Qparabolic", "Qminus", "W", "Hodd" or "Heven".
 * q is the field order (a square for the Hermitian families). */
POLARB_API polarb_status polarb_space_create(const char* family, int d, uint64_t q, polarb_space** out);
POLARB_API void polarb_space_destroy(polarb_space* space);
POLARB_API polarb_status polarb_space_describe(const polarb_space* space, char** out);

/* Enumerates every generator. limit = 0 uses the default cap. */
POLARB_API polarb_status polarb_catalog_build(const polarb_space* space, uint64_t limit, polarb_catalog** out);
/* Reads the catalog from cache_dir, enumerating and writing it on a miss.
 * cache_dir = NULL uses $POLARB_CACHE_DIR or ./.polarb-cache. */
POLARB_API polarb_status polarb_catalog_load_or_build(const polarb_space* space, const char* cache_dir,
                                                      int* from_cache, polarb_catalog** out);
POLARB_API polarb_status polarb_catalog_save(const polarb_catalog* catalog, const char* path, int with_relations);
POLARB_API polarb_status polarb_catalog_load(const polarb_space* space, const char* path, polarb_catalog** out);
POLARB_API void polarb_catalog_destroy(polarb_catalog* catalog);
POLARB_API size_t polarb_catalog_size(const polarb_catalog* catalog);
/* d - dim(g_i ∩ g_j). */
POLARB_API polarb_status polarb_catalog_codim(const polarb_catalog* catalog, size_t i, size_t j, int* out);

/* JSON reports. Each writes a NUL-terminated UTF-8 string to *out. */
POLARB_API polarb_status polarb_info_json(const polarb_space* space, char** out);
POLARB_API polarb_status polarb_enum_json(const polarb_space* space, const char* cache_dir, char** out);
POLARB_API polarb_status polarb_scheme_json(const polarb_space* space, const char* cache_dir, int* ok, char** out);
/* kind: "classical" (space required), "hermitian-cross" or "hermitian-ekr"
 * (d and q given, q the square root of the field order). */
POLARB_API polarb_status polarb_bound_json(const char* kind, const polarb_space* space, int d, uint64_t q, char** out);
/* limit = 0 uses the default sweep limit. */
POLARB_API polarb_status polarb_search_max_pairs_json(const polarb_space* space, unsigned limit, char** out);

/* Number of named checks and their ids. */
POLARB_API size_t polarb_check_count(void);
POLARB_API const char* polarb_check_id(size_t index);
/* family = NULL, d = 0, q = 0 select the defaults of the check. *passed is
 * set to 1 or 0. */
POLARB_API polarb_status polarb_verify_json(const char* check_id, const char* family, int d, uint64_t q, int* passed,
                                            char** out);
POLARB_API polarb_status polarb_summary_json(int d, uint64_t q, char** out);

#ifdef __cplusplus
}
#endif

#endif
