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

#ifndef POLARB_SHELL_HPP
#define POLARB_SHELL_HPP

#include "exact.hpp"
#include "qcount.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace polarb::shell {

using json = nlohmann::ordered_json;

/// {"num": "...", "den": "..."}, or null.
json exact_json(const std::optional<Rational>& v);
json float_json(const std::optional<Rational>& v);
json space_json(Family f, int d, std::uint64_t q);

json info(Family f, int d, std::uint64_t q);
/// Enumerates (or reads from the cache directory) and reports counts.
json enumerate(Family f, int d, std::uint64_t q, const std::filesystem::path& cache_dir);
/// Relations, intersection numbers and spectrum. "ok" is false when any
/// check fails.
json scheme(Family f, int d, std::uint64_t q, const std::filesystem::path& cache_dir);
json bound_classical(Family f, int d, std::uint64_t q);
/// q is the square root of the field order.
json bound_hermitian_cross(int d, std::uint64_t q);
json bound_hermitian_ekr(int d, std::uint64_t q);
json search_max_pairs(Family f, int d, std::uint64_t q, unsigned limit);

struct CheckParams {
    std::optional<Family> family;
    std::optional<int> d;
    /// Field order, except for the Hermitian checks (thm20, example21,
    /// q-col-signs) where it is the square root of the field order.
    std::optional<std::uint64_t> q;
};

const std::vector<std::string>& check_ids();
/// {check_id, space, status, details, exact, float}. Throws
/// ErrorCode::invalid_argument for an unknown id.
json run_check(const std::string& id, const CheckParams& params);
bool passed(const json& report);

/// Rows of the results table that can be evaluated at (d, q).
json summary(int d, std::uint64_t q);

} // namespace polarb::shell

#endif
