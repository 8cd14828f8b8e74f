#pragma once

/**
 * @file ideal_suite.hpp
 * @brief Property harness for the star-operation lemmas over window monoids.
 *
 * Each property is checked over a universe of test cases and produces one
 * report. Counterexamples are minimized by keeping the smallest failing case
 * in a fixed size order (box span, then member count), so the reported
 * witness does not depend on the enumeration order.
 */

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ideal.hpp"
#include "report.hpp"

namespace sdiv::idealsys {

using Sg1 = MonoidPtr<1>;
using Sg2 = MonoidPtr<2>;

inline Sg1 semigroup(std::vector<long> gens) { return WindowMonoid<1>::make({NumericalSemigroup(std::move(gens))}); }

inline Sg2 product(std::vector<long> g1, std::vector<long> g2) {
    return WindowMonoid<2>::make({NumericalSemigroup(std::move(g1)), NumericalSemigroup(std::move(g2))});
}

inline std::string gens_text(const std::vector<long>& gens) {
    std::string out;
    for (long g : gens) out += (out.empty() ? "" : ",") + std::to_string(g);
    return out;
}

inline std::vector<long> parse_gens(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad generator '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty generator list");
    return out;
}

/// The fixed family: <2,3>, <3,4,5>, <2,5> and N.
inline std::vector<std::vector<long>> fixed_semigroups() { return {{2, 3}, {3, 4, 5}, {2, 5}, {1}}; }

inline constexpr long kRandomMaxMultiplicity = 8;
inline constexpr long kRandomMaxConductor = 24;

/**
 * `count` distinct numerical semigroups drawn from `seed`: multiplicity m in
 * [2, 8], one to three further generators in (m, 3m], gcd 1 and conductor at
 * most 24 (larger draws are rejected to keep ideal enumeration desk-sized).
 */
inline std::vector<std::vector<long>> random_semigroups(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<long>> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 100000) throw resource_error("could not draw enough random semigroups");
        long m = std::uniform_int_distribution<long>(2, kRandomMaxMultiplicity)(rng);
        int extra = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<long> gens{m};
        for (int i = 0; i < extra; ++i) gens.push_back(std::uniform_int_distribution<long>(m + 1, 3 * m)(rng));
        long g = 0;
        for (long x : gens) g = std::gcd(g, x);
        if (g != 1) continue;
        NumericalSemigroup s(gens);
        if (s.conductor() > kRandomMaxConductor) continue;
        std::vector<long> mg = s.minimal_generators();
        bool seen = false;
        for (const auto& o : out) seen = seen || o == mg;
        if (!seen) out.push_back(mg);
    }
    return out;
}

/// Size order used to minimize counterexamples.
template <std::size_t D>
std::tuple<long, std::size_t, Point<D>> ideal_size(const SgIdeal<D>& e) {
    long span = 0;
    for (std::size_t i = 0; i < D; ++i) span += e.hi()[i] - e.lo()[i];
    return {span, e.window_members().size(), e.lo()};
}

/// Counts cases and keeps the smallest violation.
class PropResult {
  public:
    explicit PropResult(std::string claim) : claim_(std::move(claim)) {}

    void pass_case() { ++cases_; }

    template <std::size_t D>
    void violation(const std::vector<long>& gens, const SgIdeal<D>& e, json detail) {
        ++cases_;
        ++violations_;
        auto key = ideal_size(e);
        long rank = std::get<0>(key) * 100000 + static_cast<long>(std::get<1>(key));
        if (!best_rank_ || rank < *best_rank_) {
            best_rank_ = rank;
            counterexample_ = {{"semigroup", gens}, {"ideal", to_json(e)}, {"detail", std::move(detail)}};
        }
    }

    void violation(json detail) {
        ++cases_;
        ++violations_;
        if (!best_rank_) {
            best_rank_ = 0;
            counterexample_ = std::move(detail);
        }
    }

    long cases() const { return cases_; }
    long violations() const { return violations_; }

    /// Fills `r`: fail on any violation, undecided on an empty universe, else `ok`.
    void fill(Report& r, Status ok) const {
        r.witness["cases"] = cases_;
        r.witness["violations"] = violations_;
        r.witness["minimized_counterexample"] = counterexample_;
        if (violations_ > 0) r.status = Status::fail;
        else if (cases_ == 0) r.status = Status::undecided;
        else r.status = ok;
    }

  private:
    std::string claim_;
    long cases_ = 0;
    long violations_ = 0;
    std::optional<long> best_rank_;
    json counterexample_ = nullptr;
};

/// Enumeration bound used by the harness: conductor plus multiplicity, at least multiplicity plus two.
inline long default_enum_bound(const NumericalSemigroup& s) {
    return std::max(s.conductor() + s.multiplicity(), s.multiplicity() + 2);
}

/// A random fractional ideal: one to three translates with generators in [-4, 2c + 4].
inline Ideal1 random_fractional_ideal(const Sg1& s, std::mt19937_64& rng) {
    const long c = s->conductor()[0];
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Point<1>> gens;
    for (int i = 0; i < k; ++i) gens.push_back({std::uniform_int_distribution<long>(-4, 2 * c + 4)(rng)});
    return Ideal1::from_generators(s, gens);
}

// ---------------------------------------------------------------------------
// Individual properties. Each takes a semigroup list so the CLI can run one
// descriptor or the full random universe through the same code.

using SgList = std::vector<std::vector<long>>;

inline json universe_json(const SgList& sgs) {
    json out = json::array();
    for (const auto& g : sgs) out.push_back(g);
    return out;
}

/// E in E_v, (E_v)_v = E_v, E in F implies E_v in F_v, (g+E)_v = g + E_v.
inline Report closure_axioms(const SgList& sgs, std::uint64_t seed, int per_semigroup, std::vector<std::string> replay) {
    return timed("idealsys.closure-axioms", std::move(replay), [&](Report& r) {
        PropResult pr("closure-axioms");
        std::mt19937_64 rng(seed);
        for (const auto& gens : sgs) {
            Sg1 s = semigroup(gens);
            for (int i = 0; i < per_semigroup; ++i) {
                Ideal1 e = random_fractional_ideal(s, rng);
                Ideal1 f = unite(e, random_fractional_ideal(s, rng));
                const long g = std::uniform_int_distribution<long>(-6, 6)(rng);
                Ideal1 ev = v_closure(e);
                json bad = json::array();
                if (!is_subset(e, ev)) bad.push_back("extensive");
                if (!(v_closure(ev) == ev)) bad.push_back("idempotent");
                if (!is_subset(ev, v_closure(f))) bad.push_back("monotone");
                if (!(v_closure(e.translate({g})) == ev.translate({g}))) bad.push_back("translation");
                if (bad.empty()) pr.pass_case();
                else pr.violation<1>(gens, e, {{"axioms", bad}, {"g", g}});
            }
        }
        r.bounds = {{"semigroups", universe_json(sgs)}, {"ideals_per_semigroup", per_semigroup}, {"seed", seed}};
        pr.fill(r, Status::bounded_pass);
    });
}

/// t_closure(E) = v_closure(E) on every enumerated ideal.
inline Report t_equals_v(const SgList& sgs, std::vector<std::string> replay) {
    return timed("idealsys.t-equals-v", std::move(replay), [&](Report& r) {
        PropResult pr("t-equals-v");
        json bounds = json::array();
        for (const auto& gens : sgs) {
            Sg1 s = semigroup(gens);
            long b = default_enum_bound(s->factor(0));
            bounds.push_back({{"semigroup", gens}, {"min_bound", b}});
            for (const auto& e : enumerate_ideals(s, b)) {
                if (t_closure(e) == v_closure(e)) pr.pass_case();
                else pr.violation<1>(gens, e, "t-closure differs from v-closure");
            }
        }
        r.bounds = {{"enumerations", bounds}};
        pr.fill(r, Status::bounded_pass);
    });
}

/**
 * If E is proper and strong and x is in (S:E) cap S but not in E, then
 * {y in S : y + x in E} is proper and strong.
 */
inline Report strdiv_lemma(const SgList& sgs, std::vector<std::string> replay) {
    return timed("idealsys.strdiv-lemma", std::move(replay), [&](Report& r) {
        PropResult pr("strdiv-lemma");
        json bounds = json::array();
        for (const auto& gens : sgs) {
            Sg1 s = semigroup(gens);
            long b = default_enum_bound(s->factor(0));
            bounds.push_back({{"semigroup", gens}, {"min_bound", b}});
            for (const auto& e : enumerate_ideals(s, b)) {
                if (!is_strong(e)) continue;
                Ideal1 se = colon_s(e);
                for (long x = 0; x <= e.hi()[0]; ++x) {
                    if (!s->contains({x}) || !se.contains({x}) || e.contains({x})) continue;
                    Ideal1 ex = colon_in_s(e, {x});
                    if (is_proper(ex) && is_strong(ex)) pr.pass_case();
                    else pr.violation<1>(gens, e, {{"x", x}, {"colon_ideal", to_json(ex)}});
                }
            }
        }
        r.bounds = {{"enumerations", bounds}};
        pr.fill(r, Status::bounded_pass);
    });
}

/**
 * Every inclusion-maximal strongly divisorial ideal is prime. In dimension 1
 * every proper ideal lies in M, so once M itself is strongly divisorial the
 * maximal element over all ideals is M and the check is exact.
 */
inline Report maxstrdiv_prime(const SgList& sgs, std::vector<std::string> replay) {
    return timed("idealsys.maxstrdiv-prime", std::move(replay), [&](Report& r) {
        PropResult pr("maxstrdiv-prime");
        json rows = json::array();
        bool exact = true;
        for (const auto& gens : sgs) {
            Sg1 s = semigroup(gens);
            long b = default_enum_bound(s->factor(0));
            auto family = enumerate_strongly_divisorial(s, b);
            auto maxima = maximal_elements(family);
            Ideal1 m = Ideal1::maximal(s);
            const bool m_is_max = maxima.size() == 1 && maxima.front() == m;
            // For N the family is empty at every bound: each ideal is n + N and
            // (S : n+N) = -n + N differs from (n+N : n+N) = N.
            const bool krull = gens == std::vector<long>{1};
            exact = exact && (m_is_max || (krull && family.empty()));
            json mx = json::array();
            for (const auto& e : maxima) {
                mx.push_back(to_json(e));
                if (is_prime(e)) pr.pass_case();
                else pr.violation<1>(gens, e, "maximal strongly divisorial ideal is not prime");
            }
            if (maxima.empty()) pr.pass_case();
            rows.push_back({{"semigroup", gens},
                            {"min_bound", b},
                            {"strongly_divisorial", family.size()},
                            {"maximal", mx},
                            {"maximal_is_M", m_is_max}});
        }
        r.witness["per_semigroup"] = rows;
        r.bounds = {{"exact", exact}};
        pr.fill(r, exact ? Status::pass : Status::bounded_pass);
    });
}

/// Largest power tried when looking for radical(E)^k inside E.
inline constexpr long kMaxRadicalPower = 5;

/// Divisorial E containing a power (k <= 5) of its radical has a divisorial radical.
inline Report divrad(const SgList& sgs, std::vector<std::string> replay) {
    return timed("idealsys.divrad", std::move(replay), [&](Report& r) {
        PropResult pr("divrad");
        json bounds = json::array();
        for (const auto& gens : sgs) {
            Sg1 s = semigroup(gens);
            long b = default_enum_bound(s->factor(0));
            bounds.push_back({{"semigroup", gens}, {"min_bound", b}});
            for (const auto& e : enumerate_ideals(s, b)) {
                if (!is_divisorial(e)) continue;
                Ideal1 rad = radical(e);
                std::optional<long> k;
                Ideal1 pw = rad;
                for (long i = 1; i <= kMaxRadicalPower && !k; ++i) {
                    if (i > 1) pw = sum(pw, rad);
                    if (is_subset(pw, e)) k = i;
                }
                if (!k) continue;
                if (is_divisorial(rad)) pr.pass_case();
                else pr.violation<1>(gens, e, {{"k", *k}, {"radical", to_json(rad)}});
            }
        }
        r.bounds = {{"enumerations", bounds}, {"max_power", kMaxRadicalPower}};
        pr.fill(r, Status::bounded_pass);
    });
}

/// The radical of a strong ideal is strong.
inline Report radical_of_strong(const SgList& sgs, std::vector<std::string> replay) {
    return timed("idealsys.radical-of-strong", std::move(replay), [&](Report& r) {
        PropResult pr("radical-of-strong");
        json bounds = json::array();
        for (const auto& gens : sgs) {
            Sg1 s = semigroup(gens);
            long b = default_enum_bound(s->factor(0));
            bounds.push_back({{"semigroup", gens}, {"min_bound", b}});
            for (const auto& e : enumerate_ideals(s, b)) {
                if (!is_strong(e)) continue;
                Ideal1 rad = radical(e);
                if (is_strong(rad)) pr.pass_case();
                else pr.violation<1>(gens, e, {{"radical", to_json(rad)}});
            }
        }
        r.bounds = {{"enumerations", bounds}};
        pr.fill(r, Status::bounded_pass);
    });
}

/// Exactly one of: M strong, M t-invertible. Decided exactly per semigroup.
inline Report dichotomy(const SgList& sgs, std::vector<std::string> replay) {
    return timed("idealsys.dichotomy", std::move(replay), [&](Report& r) {
        PropResult pr("dichotomy");
        json rows = json::array();
        for (const auto& gens : sgs) {
            Sg1 s = semigroup(gens);
            Ideal1 m = Ideal1::maximal(s);
            const bool strong = is_strong(m);
            const bool tinv = is_t_invertible(m);
            rows.push_back({{"semigroup", gens}, {"M_strong", strong}, {"M_t_invertible", tinv}});
            if (strong != tinv) pr.pass_case();
            else pr.violation<1>(gens, m, {{"M_strong", strong}, {"M_t_invertible", tinv}});
        }
        r.witness["per_semigroup"] = rows;
        r.bounds = {{"exact", true}};
        pr.fill(r, Status::pass);
    });
}

/// Lists the strongly divisorial ideals with minimum <= bound.
inline Report enumerate(const std::vector<long>& gens, long bound, std::vector<std::string> replay) {
    return timed("idealsys.enumerate", std::move(replay), [&](Report& r) {
        Sg1 s = semigroup(gens);
        auto all = enumerate_ideals(s, bound);
        auto family = enumerate_strongly_divisorial(s, bound);
        json list = json::array();
        for (const auto& e : family) list.push_back(to_json(e));
        r.witness = {{"semigroup", gens}, {"ideals", all.size()}, {"strongly_divisorial", list}};
        r.bounds = {{"min_bound", bound}};
        r.status = Status::pass;
    });
}

/// For N: the strongly divisorial enumeration is empty.
inline Report krull_empty(long bound, std::vector<std::string> replay) {
    return timed("idealsys.krull-empty", std::move(replay), [&](Report& r) {
        auto family = enumerate_strongly_divisorial(semigroup({1}), bound);
        r.witness = {{"semigroup", {1}}, {"strongly_divisorial", family.size()}};
        r.bounds = {{"min_bound", bound}};
        r.status = family.empty() ? Status::pass : Status::fail;
    });
}

// ---------------------------------------------------------------------------
// Dimension 2: P1 = M1 x S2, P2 = S1 x M2 and I = P1 cap P2.

struct TwoPrimes {
    Ideal2 p1, p2, i;
};

inline TwoPrimes two_primes(const Sg2& s) {
    const Point<2> hi = s->conductor() + pfill<2>(1);
    const auto& w = *s;
    auto p1 = Ideal2::from_predicate(s, {1, 0}, hi, [&](const Point<2>& x) { return x[0] != 0 && w.contains(x); });
    auto p2 = Ideal2::from_predicate(s, {0, 1}, hi, [&](const Point<2>& x) { return x[1] != 0 && w.contains(x); });
    return {p1, p2, intersect(p1, p2)};
}

/**
 * Irredundant intersection of two primes: I strong iff both primes strong,
 * I divisorial iff both primes divisorial; and when I is divisorial each
 * essential prime is divisorial, with (I :_S P2) = P1 as in the argument.
 */
inline Report irred2d(const std::vector<std::pair<std::vector<long>, std::vector<long>>>& pairs,
                      std::vector<std::string> replay) {
    return timed("idealsys.irred2d", std::move(replay), [&](Report& r) {
        PropResult pr("irred2d");
        json rows = json::array();
        for (const auto& [g1, g2] : pairs) {
            Sg2 s = product(g1, g2);
            auto [p1, p2, i] = two_primes(s);
            const bool prime1 = is_prime(p1), prime2 = is_prime(p2);
            const bool irredundant = !is_subset(p1, p2) && !is_subset(p2, p1);
            const bool s1 = is_strong(p1), s2 = is_strong(p2), si = is_strong(i);
            const bool d1 = is_divisorial(p1), d2 = is_divisorial(p2), di = is_divisorial(i);
            const bool colon_ok = intersect(Ideal2::whole(s), colon(i, p2)) == p1;
            json row = {{"S1", g1},          {"S2", g2},          {"primes", prime1 && prime2},
                        {"irredundant", irredundant},              {"P1_strong", s1},
                        {"P2_strong", s2},   {"I_strong", si},    {"P1_divisorial", d1},
                        {"P2_divisorial", d2}, {"I_divisorial", di}, {"colon_I_P2_is_P1", colon_ok}};
            rows.push_back(row);
            const bool strong_eq = si == (s1 && s2);
            const bool div_eq = di == (d1 && d2);
            const bool preirred = !di || (d1 && d2);
            if (prime1 && prime2 && irredundant && strong_eq && div_eq && preirred && colon_ok) pr.pass_case();
            else pr.violation<2>(g1, i, row);
        }
        r.witness["per_pair"] = rows;
        r.bounds = {{"exact", true}};
        pr.fill(r, Status::pass);
    });
}

inline std::vector<std::pair<std::vector<long>, std::vector<long>>> default_2d_pairs() {
    return {{{2, 3}, {2, 3}}, {{2, 3}, {1}}, {{1}, {1}}, {{3, 4, 5}, {2, 5}}, {{2, 5}, {3, 5, 7}}};
}

/**
 * Criterion-level harness universe: the fixed family plus `count` random
 * semigroups that are not already in it. Draws are prefix-stable for a seed,
 * so drawing more and skipping the fixed ones keeps the choice deterministic.
 */
inline SgList harness_universe(std::uint64_t seed, int count) {
    const SgList fixed = fixed_semigroups();
    SgList out = fixed;
    for (auto& g : random_semigroups(seed, count + static_cast<int>(fixed.size()))) {
        if (static_cast<int>(out.size() - fixed.size()) == count) break;
        if (std::find(fixed.begin(), fixed.end(), g) == fixed.end()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace sdiv::idealsys
