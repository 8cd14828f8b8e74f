// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sdiv/ideal_suite.hpp"
#include "sdiv/rees_suite.hpp"
#include "sdiv/s21_suite.hpp"
#include "sdiv/w22_suite.hpp"

using namespace sdiv;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool ok = false;
    std::string detail;
};

bool all_success(const std::vector<Report>& reports, std::string& detail) {
    bool ok = true;
    for (const auto& r : reports) {
        if (!is_success(r.status)) {
            ok = false;
            detail += " " + r.claim_id + "=" + to_string(r.status);
        }
    }
    if (ok) detail = std::to_string(reports.size()) + " reports pass or bounded-pass";
    return ok;
}

// Sums of g_n = n + 1 + 2^-n up to `bound`, by breadth-first closure.
std::set<Rat> bfs_members(const Rat& bound) {
    std::vector<Rat> gens;
    for (long long n = 0;; ++n) {
        Rat g = Rat(n + 1) + Rat(BigInt(1), BigInt(1) << n);
        if (g > bound) break;
        gens.push_back(g);
    }
    std::set<Rat> seen{Rat(0)};
    std::vector<Rat> queue{Rat(0)};
    while (!queue.empty()) {
        Rat x = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            Rat y = x + g;
            if (y <= bound && seen.insert(y).second) queue.push_back(y);
        }
    }
    return seen;
}

Outcome criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    const QMonoid S = QMonoid::paper_s21();
    const auto oracle = bfs_members(Rat(12));
    long checked = 0, mismatches = 0;
    for (long a = 0; a <= 12 * 64; ++a) {
        Rat q(a, 64);
        ++checked;
        if (S.contains(q) != (oracle.count(q) == 1)) ++mismatches;
    }
    bool named = S.contains(Rat(2)) && S.contains(Rat(5)) && !S.contains(Rat(1)) && !S.contains(Rat(3));
    for (long n = 4; n <= 12; ++n) named = named && S.contains(Rat(n));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[160];
    std::snprintf(buf, sizeof buf, "%ld dyadic values, %ld mismatches, named members ok=%d, %.2fs", checked, mismatches,
                  named ? 1 : 0, secs);
    return {mismatches == 0 && named && checked == 769 && secs < 10.0, buf};
}

Outcome criterion2() {
    const QMonoid S = QMonoid::paper_s21();
    long failures = 0;
    std::string detail;
    for (const Rat& s : {Rat(0), Rat(2), Rat(5, 2), Rat(4), Rat(5), Rat(13, 4)}) {
        long bound = conductor_gap_bound(s);
        auto n = conductor_gap_witness(S, s, bound);
        if (!n) ++failures;
        detail += s.str() + "->" + (n ? std::to_string(*n) : "none") + "(<=" + std::to_string(bound) + ") ";
    }
    return {failures == 0, detail + "failures " + std::to_string(failures)};
}

Outcome criterion3() {
    Report r = s21::lemma2_desk(QMonoid::paper_s21(), Rat(8), 4, Rat(16));
    bool ok = r.status == Status::bounded_pass && r.witness["failures"] == 0 && r.witness["outside_group_cases"] == 0;
    return {ok, to_string(r.status) + ", " + r.witness["nontrivial_cases"].dump() + " non-members checked, " +
                    r.witness["failures"].dump() + " failures"};
}

Outcome criterion4() {
    Report r = s21::ass_desk(QMonoid::paper_s21(), kSeed, 50, 12);
    return {r.status == Status::bounded_pass,
            to_string(r.status) + ", 50 polynomials, failures " + r.witness["failures"].dump() + ", frobenius mismatches " +
                r.witness["frobenius_mismatches"].dump() + ", max n " + r.witness["max_n"].dump()};
}

Outcome criterion5() {
    auto sgs = idealsys::harness_universe(kSeed, 10);
    std::vector<std::string> rp{"idealsys", "harness"};
    const int per = std::max(20, static_cast<int>((200 + sgs.size() - 1) / sgs.size()));
    std::vector<Report> reps{idealsys::closure_axioms(sgs, kSeed, per, rp),
                             idealsys::t_equals_v(sgs, rp),
                             idealsys::strdiv_lemma(sgs, rp),
                             idealsys::maxstrdiv_prime(sgs, rp),
                             idealsys::divrad(sgs, rp),
                             idealsys::radical_of_strong(sgs, rp),
                             idealsys::dichotomy(sgs, rp),
                             idealsys::krull_empty(6, rp)};
    std::string detail;
    bool ok = sgs.size() >= 14 && all_success(reps, detail);
    long ideals = reps[0].witness["cases"].get<long>();
    ok = ok && ideals >= 200;
    return {ok, std::to_string(sgs.size()) + " semigroups, " + std::to_string(ideals) + " random ideals; " + detail};
}

Outcome criterion6() {
    Report r = idealsys::irred2d({{{2, 3}, {2, 3}}}, {"idealsys", "irred2d", "--gens1", "2,3", "--gens2", "2,3"});
    const auto& row = r.witness["per_pair"][0];
    return {r.status == Status::pass && r.witness["violations"] == 0,
            to_string(r.status) + ", I strong=" + row["I_strong"].dump() + ", I divisorial=" + row["I_divisorial"].dump()};
}

Outcome criterion7() {
    std::vector<Report> reps{w22::multiplicativity(kSeed, 100), w22::strip_sweep(kSeed, 100), w22::witness_outside_a()};
    std::string detail;
    bool ok = all_success(reps, detail);
    ok = ok && reps[2].witness["weight"] == "0" && reps[2].witness["in_A"] == false;
    return {ok, detail + ", X1*X2^-2 weight " + reps[2].witness["weight"].get<std::string>()};
}

Outcome criterion8() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Report> reps{rees::identities(4), rees::swap_permutes(4), rees::colon_collapse(1, 4),
                             rees::colon_collapse(2, 4)};
    for (std::size_t n = 2; n <= kMaxReesLevel; ++n) reps.push_back(rees::conductor(n, default_conductor_samples()));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail;
    bool ok = all_success(reps, detail) && secs < 120.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.2fs", secs);
    return {ok, detail + buf};
}

// Dropping the 2^-n term gives N: the divisorial-gap sweep must stop passing and flag vacuity.
Outcome criterion9() {
    Report r = s21::lemma2_desk(QMonoid::integer_family(), Rat(8), 4, Rat(16));
    bool flipped = !is_success(r.status) && r.witness["vacuous"] == true;
    return {flipped, "mutated family gives " + to_string(r.status) + ", vacuous=" + r.witness["vacuous"].dump() +
                         ", nontrivial cases " + r.witness["nontrivial_cases"].dump()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"membership agrees with BFS oracle", criterion1},
        {"conductor gap within proof bound", criterion2},
        {"divisorial gap for every non-member", criterion3},
        {"monomial associates on random polynomials", criterion4},
        {"ideal property harness", criterion5},
        {"2D irredundant intersection", criterion6},
        {"weight calculus", criterion7},
        {"Rees tower checks", criterion8},
        {"negative control flips the gap sweep", criterion9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.ok;
        std::printf("%s criterion %zu (%s): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
