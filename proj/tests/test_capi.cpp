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

#include <polarb/polarb.h>

#include <doctest.h>

#include <cstring>
#include <string>

TEST_CASE("space lifecycle and errors")
{
    polarb_space* s = nullptr;
    CHECK(polarb_space_create("W", 2, 3, &s) == POLARB_OK);
    REQUIRE(s);
    CHECK(std::string(polarb_last_error()).empty());
    char* d = nullptr;
    CHECK(polarb_space_describe(s, &d) == POLARB_OK);
    CHECK(std::string(d).find("W") != std::string::npos);
    polarb_string_free(d);
    polarb_space_destroy(s);

    polarb_space* bad = nullptr;
    CHECK(polarb_space_create("Nope", 2, 3, &bad) == POLARB_ERR_INVALID_ARGUMENT);
    CHECK(bad == nullptr);
    CHECK(std::string(polarb_last_error()).find("Nope") != std::string::npos);
    CHECK(polarb_space_create("Hodd", 2, 3, &bad) == POLARB_ERR_INVALID_ARGUMENT);
    CHECK(polarb_space_create(nullptr, 2, 3, &bad) == POLARB_ERR_INVALID_ARGUMENT);
    CHECK(std::string(polarb_status_name(POLARB_ERR_FORMAT)) == "format error");
}

TEST_CASE("catalogs")
{
    polarb_space* s = nullptr;
    REQUIRE(polarb_space_create("Hodd", 2, 4, &s) == POLARB_OK);
    polarb_catalog* c = nullptr;
    REQUIRE(polarb_catalog_build(s, 0, &c) == POLARB_OK);
    CHECK(polarb_catalog_size(c) == 27);
    int codim = -1;
    CHECK(polarb_catalog_codim(c, 0, 0, &codim) == POLARB_OK);
    CHECK(codim == 0);
    CHECK(polarb_catalog_codim(c, 0, 27, &codim) == POLARB_ERR_INVALID_ARGUMENT);

    const std::string path = "polarb-capi-test.cat";
    CHECK(polarb_catalog_save(c, path.c_str(), 1) == POLARB_OK);
    polarb_catalog* back = nullptr;
    CHECK(polarb_catalog_load(s, path.c_str(), &back) == POLARB_OK);
    CHECK(polarb_catalog_size(back) == 27);
    polarb_catalog_destroy(back);

    polarb_space* other = nullptr;
    REQUIRE(polarb_space_create("W", 2, 2, &other) == POLARB_OK);
    CHECK(polarb_catalog_load(other, path.c_str(), &back) == POLARB_ERR_FORMAT);
    std::remove(path.c_str());
    CHECK(polarb_catalog_load(s, path.c_str(), &back) == POLARB_ERR_IO);

    polarb_space* big = nullptr;
    REQUIRE(polarb_space_create("Qplus", 4, 2, &big) == POLARB_OK);
    CHECK(polarb_catalog_build(big, 10, &back) == POLARB_ERR_LIMIT_EXCEEDED);

    polarb_space_destroy(big);
    polarb_space_destroy(other);
    polarb_catalog_destroy(c);
    polarb_space_destroy(s);
}

TEST_CASE("json entry points")
{
    polarb_space* s = nullptr;
    REQUIRE(polarb_space_create("Qplus", 4, 2, &s) == POLARB_OK);
    char* out = nullptr;
    CHECK(polarb_bound_json("classical", s, 0, 0, &out) == POLARB_OK);
    CHECK(std::string(out).find("\"135\"") != std::string::npos);
    polarb_string_free(out);
    CHECK(polarb_bound_json("bogus", s, 0, 0, &out) == POLARB_ERR_INVALID_ARGUMENT);
    CHECK(polarb_search_max_pairs_json(s, 0, &out) == POLARB_ERR_LIMIT_EXCEEDED);
    polarb_space_destroy(s);

    CHECK(polarb_check_count() == 11);
    CHECK(std::string(polarb_check_id(0)) == "thm5-support");
    CHECK(polarb_check_id(11) == nullptr);
    int passed = 0;
    CHECK(polarb_verify_json("thm16", nullptr, 0, 0, &passed, &out) == POLARB_OK);
    CHECK(passed == 1);
    polarb_string_free(out);
    CHECK(polarb_verify_json("thm99", nullptr, 0, 0, &passed, &out) == POLARB_ERR_INVALID_ARGUMENT);
    CHECK(polarb_summary_json(4, 2, &out) == POLARB_OK);
    polarb_string_free(out);
}
