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

#ifndef POLARB_REPORT_HPP
#define POLARB_REPORT_HPP

#include <string>
#include <vector>

namespace polarb {

/// Outcome of a verification: a pass flag plus one human-readable line per
/// individual check, in a deterministic order.
struct Report {
    bool ok = true;
    std::vector<std::string> details;

    bool check(bool cond, const std::string& what)
    {
        details.push_back((cond ? "ok: " : "FAIL: ") + what);
        ok = ok && cond;
        return cond;
    }
    void note(const std::string& what) { details.push_back("note: " + what); }
    void merge(const Report& other, const std::string& prefix = {})
    {
        for (const auto& d : other.details)
            details.push_back(prefix + d);
        ok = ok && other.ok;
    }
};

} // namespace polarb

#endif
