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

// Command-line front end over the polarb C API.

#include <polarb/polarb.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

using json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct SpaceArgs {
    std::string family;
    int d = 0;
    std::uint64_t q = 0;
};

void add_space(CLI::App* cmd, SpaceArgs& s)
{
    cmd->add_option("family", s.family, "Qplus, Qparabolic, Qminus, W, Hodd or Heven")->required();
    cmd->add_option("d", s.d, "rank")->required();
    cmd->add_option("q", s.q, "field order")->required();
}

int error_exit(polarb_status st)
{
    std::cerr << "error: " << polarb_status_name(st) << ": " << polarb_last_error() << "\n";
    return st == POLARB_ERR_INVALID_ARGUMENT ? kUsage : kFail;
}

// Owns a string returned by the library.
struct Text {
    char* p = nullptr;
    ~Text() { polarb_string_free(p); }
    json parse() const { return json::parse(p); }
};

struct Space {
    polarb_space* p = nullptr;
    ~Space() { polarb_space_destroy(p); }
};

std::string scalar(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_object() && v.contains("num") && v.contains("den")) {
        const auto den = v["den"].get<std::string>();
        return den == "1" ? v["num"].get<std::string>() : v["num"].get<std::string>() + "/" + den;
    }
    return v.dump();
}

void print_tree(const json& j, int indent = 0)
{
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if ((v.is_object() && !(v.contains("num") && v.contains("den"))) || (v.is_array() && !v.empty() && v[0].is_structured())) {
                std::cout << pad << k << ":\n";
                print_tree(v, indent + 2);
            } else if (v.is_array()) {
                std::string line;
                for (const auto& x : v)
                    line += (line.empty() ? "" : " ") + scalar(x);
                std::cout << pad << k << ": [" << line << "]\n";
            } else {
                std::cout << pad << k << ": " << scalar(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured()) {
                std::cout << pad << "-\n";
                print_tree(v, indent + 2);
            } else {
                std::cout << pad << "- " << scalar(v) << "\n";
            }
        }
    } else {
        std::cout << pad << scalar(j) << "\n";
    }
}

std::string space_label(const json& s)
{
    if (s.is_array()) {
        std::string out;
        for (const auto& x : s)
            out += (out.empty() ? "" : ", ") + space_label(x);
        return out;
    }
    return scalar(s["family"]) + "(d=" + scalar(s["d"]) + ", q=" + scalar(s["q"]) + ")";
}

void print_check(const json& r)
{
    std::cout << r["check_id"].get<std::string>() << " on " << space_label(r["space"]) << ": "
              << (r["status"] == "pass" ? "PASS" : "FAIL") << "\n";
    for (const auto& line : r["details"])
        std::cout << "  " << line.get<std::string>() << "\n";
    if (!r["exact"].is_null())
        std::cout << "  value: " << scalar(r["exact"]) << " (" << r["float"].get<double>() << ")\n";
}

int output(const Text& t, bool as_json)
{
    if (as_json)
        std::cout << t.p << "\n";
    else
        print_tree(t.parse());
    return kPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generators of finite classical polar spaces: enumeration, association scheme, "
                 "cross-intersecting bounds and verification"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "print JSON instead of text");

    SpaceArgs info_s, enum_s, scheme_s, search_s;
    std::string cache_dir;

    auto* info = app.add_subcommand("info", "counts, spectrum and classical bound");
    add_space(info, info_s);

    auto* en = app.add_subcommand("enum", "enumerate generators into the cache");
    add_space(en, enum_s);
    en->add_option("--cache-dir", cache_dir, "cache directory (default $POLARB_CACHE_DIR or ./.polarb-cache)");

    auto* sch = app.add_subcommand("scheme", "relations, intersection numbers and spectrum");
    add_space(sch, scheme_s);
    bool scheme_check = false;
    sch->add_flag("--check", scheme_check, "exit 1 when any scheme check fails");
    sch->add_option("--cache-dir", cache_dir, "cache directory");

    auto* bound = app.add_subcommand("bound", "exact bound values");
    bound->require_subcommand(1);
    SpaceArgs classical_s;
    auto* classical = bound->add_subcommand("classical", "Hoffman bound of the disjointness graph");
    add_space(classical, classical_s);
    int herm_d = 0;
    std::uint64_t herm_q = 0;
    auto* hcross = bound->add_subcommand("hermitian-cross", "weighted bound for H(2d-1, q^2)");
    hcross->add_option("d", herm_d, "rank")->required();
    hcross->add_option("q", herm_q, "square root of the field order")->required();
    auto* hekr = bound->add_subcommand("hermitian-ekr", "EKR bound for H(2d-1, q^2), d odd");
    hekr->add_option("d", herm_d, "rank")->required();
    hekr->add_option("q", herm_q, "square root of the field order")->required();

    auto* search = app.add_subcommand("search", "searches for extremal pairs");
    search->require_subcommand(1);
    auto* maxp = search->add_subcommand("max-pairs", "complete list of maximal cross-intersecting pairs");
    add_space(maxp, search_s);
    unsigned limit = 22;
    maxp->add_option("--limit", limit, "largest closed non-neighbourhood to sweep")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a named verification ('all' runs every one)");
    std::string check_id;
    std::optional<std::string> v_family;
    int v_d = 0;
    std::uint64_t v_q = 0;
    verify->add_option("check", check_id, "check id")->required();
    verify->add_option("--family", v_family, "polar space family");
    verify->add_option("--d", v_d, "rank");
    verify->add_option("--q", v_q, "field order (square root of it for Hermitian checks)");

    auto* summary = app.add_subcommand("summary", "results table at given parameters");
    int s_d = 4;
    std::uint64_t s_q = 2;
    summary->add_option("--d", s_d, "rank")->capture_default_str();
    summary->add_option("--q", s_q, "field order, or its square root for Hermitian rows")->capture_default_str();

    for (auto* sub : {info, en, sch, classical, hcross, hekr, maxp, verify, summary})
        sub->add_flag("--json", as_json, "print JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const char* dir = cache_dir.empty() ? nullptr : cache_dir.c_str();
    auto make_space = [](const SpaceArgs& s, Space& out) {
        return polarb_space_create(s.family.c_str(), s.d, s.q, &out.p);
    };
    Space sp;
    Text t;
    polarb_status st = POLARB_OK;

    if (*info) {
        if ((st = make_space(info_s, sp)) != POLARB_OK || (st = polarb_info_json(sp.p, &t.p)) != POLARB_OK)
            return error_exit(st);
        return output(t, as_json);
    }
    if (*en) {
        if ((st = make_space(enum_s, sp)) != POLARB_OK || (st = polarb_enum_json(sp.p, dir, &t.p)) != POLARB_OK)
            return error_exit(st);
        return output(t, as_json);
    }
    if (*sch) {
        int ok = 0;
        if ((st = make_space(scheme_s, sp)) != POLARB_OK || (st = polarb_scheme_json(sp.p, dir, &ok, &t.p)) != POLARB_OK)
            return error_exit(st);
        output(t, as_json);
        return scheme_check && !ok ? kFail : kPass;
    }
    if (*classical) {
        if ((st = make_space(classical_s, sp)) != POLARB_OK
            || (st = polarb_bound_json("classical", sp.p, 0, 0, &t.p)) != POLARB_OK)
            return error_exit(st);
        if (!as_json) {
            const auto j = t.parse();
            std::cout << scalar(j["bound"]) << "\n";
            std::cout << "  decimal " << j["bound_decimal"].get<std::string>() << ", case "
                      << j["equality_case"].get<std::string>() << ", lambda_b " << j["lambda_b"].get<std::string>()
                      << ", k " << j["k"].get<std::string>() << ", n " << j["n"].get<std::string>() << "\n";
            return kPass;
        }
        return output(t, true);
    }
    if (*hcross || *hekr) {
        if ((st = polarb_bound_json(*hcross ? "hermitian-cross" : "hermitian-ekr", nullptr, herm_d, herm_q, &t.p))
            != POLARB_OK)
            return error_exit(st);
        return output(t, as_json);
    }
    if (*maxp) {
        if ((st = make_space(search_s, sp)) != POLARB_OK
            || (st = polarb_search_max_pairs_json(sp.p, limit, &t.p)) != POLARB_OK)
            return error_exit(st);
        if (!as_json) {
            const auto j = t.parse();
            std::cout << "maximal pairs: " << j["maximal_pairs"] << ", max |Y||Z| = " << j["max_product"]
                      << ", bound squared = " << scalar(j["bound_squared"]) << "\n";
            for (const auto& f : j["families"])
                std::cout << "  " << f["family"].get<std::string>() << ": product " << f["product"] << ", "
                          << f["pairs"] << " pairs\n";
            return kPass;
        }
        return output(t, true);
    }
    if (*verify) {
        std::vector<std::string> ids;
        if (check_id == "all")
            for (std::size_t i = 0; i < polarb_check_count(); ++i)
                ids.emplace_back(polarb_check_id(i));
        else
            ids.push_back(check_id);
        bool all_ok = true;
        json reports = json::array();
        for (const auto& id : ids) {
            Text r;
            int passed = 0;
            st = polarb_verify_json(id.c_str(), v_family ? v_family->c_str() : nullptr, v_d, v_q, &passed, &r.p);
            if (st != POLARB_OK)
                return error_exit(st);
            all_ok = all_ok && passed;
            if (as_json)
                reports.push_back(r.parse());
            else
                print_check(r.parse());
        }
        if (as_json)
            std::cout << (ids.size() == 1 ? reports[0] : reports).dump(2) << "\n";
        return all_ok ? kPass : kFail;
    }
    if (*summary) {
        if ((st = polarb_summary_json(s_d, s_q, &t.p)) != POLARB_OK)
            return error_exit(st);
        if (!as_json) {
            const auto j = t.parse();
            for (const auto& r : j["rows"]) {
                std::cout << r["space"].get<std::string>() << "\n";
                std::cout << "  max sqrt(|Y||Z|): "
                          << (r["max_sqrt_product"].is_null() ? std::string("-") : scalar(r["max_sqrt_product"]));
                if (!r["max_sqrt_product_float"].is_null())
                    std::cout << " (" << r["max_sqrt_product_float"].get<double>() << ")";
                std::cout << "\n  example: " << r["example"].get<std::string>();
                if (!r["example_sqrt_product"].is_null())
                    std::cout << " [" << scalar(r["example_sqrt_product"]) << "]";
                std::cout << "\n  " << r["note"].get<std::string>() << "\n";
            }
            return kPass;
        }
        return output(t, true);
    }
    return kUsage;
}
