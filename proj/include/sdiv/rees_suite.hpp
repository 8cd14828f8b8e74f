#pragma once

// Reports for the Rees tower checks.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rees.hpp"
#include "report.hpp"

namespace sdiv::rees {

inline void check_level(std::size_t n) {
    if (n > kMaxReesLevel) throw resource_error("tower level " + std::to_string(n) + " above the cap " +
                                                std::to_string(kMaxReesLevel));
}

inline json decomposition_json(const TowerDecomposition& d) {
    json out = json::object();
    for (const auto& [g, k] : d) out[g] = k;
    return out;
}

inline Report expand_word(const std::string& w) {
    return timed("rees.expand", {"rees", "expand", w}, [&](Report& r) {
        TMono m = expand(TWord(w));
        r.witness = {{"word", w}, {"expansion", m.str()}, {"monomial", to_json(m)}};
        r.bounds = {{"exact", true}};
        r.status = Status::pass;
    });
}

inline Report identities(std::size_t n) {
    check_level(n);
    return timed("rees.identities", {"rees", "identities", std::to_string(n)}, [&](Report& r) {
        json rows = json::array();
        long failed = 0;
        for (const auto& c : verify_generator_identities(n)) {
            rows.push_back({{"identity", c.identity}, {"holds", c.holds}});
            failed += !c.holds;
        }
        // Expansions carry a-exponent 0 or 1.
        long bad_a = 0;
        for (const auto& w : TWord::all_up_to(n)) {
            long e = expand(w).a_exp;
            bad_a += e != 0 && e != 1;
        }
        r.witness = {{"identities", rows}, {"count", rows.size()}, {"failed", failed}, {"a_exponent_violations", bad_a}};
        r.bounds = {{"level", n}};
        r.status = failed == 0 && bad_a == 0 ? Status::pass : Status::fail;
    });
}

inline std::set<TMono> generator_set(std::size_t n) {
    auto g = level_generators(n);
    return {g.begin(), g.end()};
}

/// Image of m under the swap; passes when the swap is an involution on m.
inline Report swap(const std::string& prefix, const TMono& m) {
    return timed("rees.swap", {"rees", "swap", prefix.empty() ? "-" : prefix, m.str()}, [&](Report& r) {
        TMono img = swap_automorphism(prefix, m);
        const bool inv = swap_automorphism(prefix, img) == m;
        r.witness = {{"prefix", prefix}, {"input", m.str()}, {"image", img.str()}, {"involution", inv}};
        r.bounds = {{"exact", true}};
        r.status = inv ? Status::pass : Status::fail;
    });
}

/// Every swap with |prefix| < n permutes the level-n generator set, for n <= max_level.
inline Report swap_permutes(std::size_t max_level) {
    check_level(max_level);
    return timed("rees.swap-permutes", {"rees", "swap-permutes", std::to_string(max_level)}, [&](Report& r) {
        long checked = 0;
        json failures = json::array();
        for (std::size_t n = 1; n <= max_level; ++n) {
            const auto gens = generator_set(n);
            std::vector<std::string> prefixes{""};
            for (const auto& w : TWord::all_up_to(n - 1)) prefixes.push_back(w.bits());
            for (const auto& p : prefixes) {
                std::set<TMono> img;
                bool inv = true;
                for (const auto& g : gens) {
                    TMono h = swap_automorphism(p, g);
                    inv = inv && swap_automorphism(p, h) == g;
                    img.insert(h);
                }
                ++checked;
                if (img != gens || !inv) failures.push_back({{"level", n}, {"prefix", p}});
            }
        }
        r.witness = {{"swaps_checked", checked}, {"failures", failures}};
        r.bounds = {{"max_level", max_level}};
        r.status = failures.empty() ? Status::pass : Status::fail;
    });
}

/// Membership in level n; "fail" means m is not a member.
inline Report member(const TMono& m, std::size_t n) {
    check_level(n);
    return timed("rees.member", {"rees", "member", m.str(), "--level", std::to_string(n)}, [&](Report& r) {
        auto dec = level_decomposition(m, n);
        r.witness = {{"monomial", m.str()}, {"level", n}, {"member", dec.has_value()}};
        if (dec) {
            r.witness["decomposition"] = decomposition_json(*dec);
            r.witness["decomposition_verified"] = compose(*dec) == m;
        }
        r.bounds = {{"exact", true}};
        r.status = dec && compose(*dec) == m ? Status::pass : Status::fail;
    });
}

inline Report colon_collapse(std::size_t n, long window) {
    check_level(n);
    return timed("rees.colon-collapse", {"rees", "colon-collapse", std::to_string(n), "--bound", std::to_string(window)},
                 [&](Report& r) {
                     auto rep = colon_collapse_check(n, window);
                     json viol = json::array();
                     for (const auto& v : rep.violations) viol.push_back({{"f", v.f.str()}, {"reason", v.reason}});
                     r.witness = {{"level", rep.level},
                                  {"violations", viol},
                                  {"checked", rep.checked},
                                  {"outside_level", rep.outside_level},
                                  {"hypothesis_held", rep.hypothesis_held},
                                  {"evaluation_checked", rep.evaluation_checked}};
                     r.bounds = {{"window_total_degree", window}};
                     r.status = viol.empty() ? Status::bounded_pass : Status::fail;
                 });
}

inline Report conductor(std::size_t n, const std::vector<TMono>& samples) {
    check_level(n);
    std::vector<std::string> replay{"rees", "conductor", std::to_string(n)};
    for (const auto& s : samples) replay.push_back(s.str());
    return timed("rees.conductor", replay, [&](Report& r) {
        json rows = json::array();
        long failed = 0;
        for (const auto& c : conductor_membership_check(n, samples)) {
            rows.push_back({{"sample", c.sample.str()}, {"a_times_sample", c.product.str()}, {"in_level", c.in_level}});
            failed += !c.in_level;
        }
        r.witness = {{"samples", rows}, {"failed", failed}};
        r.bounds = {{"level", n}, {"base", "<2,3>, a = y^2"}};
        r.status = failed == 0 ? Status::pass : Status::fail;
    });
}

}  // namespace sdiv::rees
