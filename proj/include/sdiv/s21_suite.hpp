#pragma once

/**
 * @file s21_suite.hpp
 * @brief Reports for the dyadic monoid S = < n + 1 + 1/2^n >.
 */

#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "charp.hpp"
#include "qmonoid.hpp"
#include "report.hpp"

namespace sdiv::s21 {

/// Flag form of a monoid: "paper-s21", "integer-family" or a comma list of generators.
inline std::string monoid_flag(const QMonoid& m) {
    if (m.kind() == QMonoid::Kind::family) return m.name();
    std::string out;
    for (const auto& g : m.finite_generators()) out += (out.empty() ? "" : ",") + g.str();
    return out;
}

/// Inverse of monoid_flag; a JSON descriptor is accepted as well.
inline QMonoid monoid_from_flag(const std::string& text) {
    if (!text.empty() && text.front() == '{') return monoid_from_json(json::parse(text));
    if (text == "paper-s21") return QMonoid::paper_s21();
    if (text == "integer-family") return QMonoid::integer_family();
    std::vector<Rat> gens;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        gens.push_back(Rat::parse(text.substr(i, j - i)));
        i = j + 1;
    }
    return QMonoid::finite(std::move(gens));
}

/// CLI arguments for a report on `m`; the default monoid needs no flag.
inline std::vector<std::string> replay_for(const QMonoid& m, std::vector<std::string> args) {
    if (!(m.kind() == QMonoid::Kind::family && m.name() == "paper-s21")) {
        args.push_back("--monoid");
        args.push_back(monoid_flag(m));
    }
    return args;
}

inline Report member(const QMonoid& m, const Rat& q) {
    return timed("s21.member", replay_for(m, {"s21", "member", q.str()}), [&](Report& r) {
        auto rep = m.representation(q);
        r.status = rep ? Status::pass : Status::fail;
        r.witness = {{"q", q.str()}, {"member", rep.has_value()}};
        if (rep) r.witness["representation"] = to_json(*rep);
        r.bounds = {{"exact", true}};
    });
}

inline Report represent(const QMonoid& m, const Rat& q) {
    return timed("s21.represent", replay_for(m, {"s21", "represent", q.str()}), [&](Report& r) {
        auto rep = m.representation(q);
        r.status = rep && m.value(*rep) == q ? Status::pass : Status::fail;
        r.witness = {{"q", q.str()}};
        if (rep) {
            r.witness["representation"] = to_json(*rep);
            r.witness["value"] = m.value(*rep).str();
        } else {
            r.witness["representation"] = nullptr;
        }
        r.bounds = {{"exact", true}};
    });
}

/**
 * m / 2^n in S for all large m. Reports the least m0 <= mmax such that every
 * m in [m0, mmax] gives a member. If that run spans a value range >= the
 * smallest integer generator step 2 (2 is in S), every later lattice point is
 * a run element plus a multiple of 2, so the tail is proved, not just sampled.
 */
inline Report lemma1(const QMonoid& m, long n, long mmax) {
    return timed("s21.lemma-semigroup.1", replay_for(m, {"s21", "lemma1", std::to_string(n), std::to_string(mmax)}), [&](Report& r) {
        if (n < 0 || mmax < 1) throw domain_error("lemma1 needs n >= 0 and mmax >= 1");
        const Rat step = pow2(-n);
        long m0 = mmax + 1;
        for (long k = mmax; k >= 1 && m.contains(Rat(k) * step); --k) m0 = k;
        const long run = mmax - m0 + 1;
        const long needed = 2L << n;  // lattice points spanning a value range of 2
        const bool closes = m.contains(Rat(2));
        r.bounds = {{"n", n}, {"mmax", mmax}, {"run_needed_for_proof", needed}};
        auto least = integral_multiple_witness(m, step, mmax);
        r.witness = {{"threshold_m0", m0 <= mmax ? json(m0) : json(nullptr)},
                     {"run_length", run},
                     {"least_multiple_k", least ? json(*least) : json(nullptr)}};
        if (run >= needed && closes) {
            r.status = Status::pass;
            r.witness["tail_proved"] = true;
        } else if (run > 0) {
            r.status = Status::undecided;
            r.witness["tail_proved"] = false;
        } else {
            r.status = Status::fail;
            r.witness["tail_proved"] = false;
        }
    });
}

inline Report lemma2_witness(const QMonoid& m, const Rat& q, const Rat& bound) {
    return timed("s21.lemma-semigroup.2", replay_for(m, {"s21", "lemma2-witness", q.str(), "--bound", bound.str()}), [&](Report& r) {
        auto s = divisorial_gap_witness(m, q, bound);
        r.bounds = {{"search_bound", bound.str()}};
        r.witness = {{"q", q.str()}, {"witness_s", s ? json(s->str()) : json(nullptr)}, {"checked_up_to", bound.str()}};
        if (s) r.witness["q_plus_s"] = (q + *s).str();
        r.status = s ? Status::bounded_pass : Status::fail;
    });
}

inline Report lemma3(const QMonoid& m, const Rat& s, long nmax) {
    return timed("s21.lemma-semigroup.3", replay_for(m, {"s21", "lemma3", s.str(), std::to_string(nmax)}), [&](Report& r) {
        auto n = conductor_gap_witness(m, s, nmax);
        r.bounds = {{"nmax", nmax}, {"proof_bound", conductor_gap_bound(s)}};
        r.witness = {{"s", s.str()}, {"n", n ? json(*n) : json(nullptr)}};
        if (n) r.witness["s_plus_2^-n"] = (s + pow2(-*n)).str();
        r.status = n ? Status::bounded_pass : Status::fail;
    });
}

inline Report seminormal(const QMonoid& m, const Rat& q, long nmax) {
    return timed("s21.seminormal", replay_for(m, {"s21", "seminormal", q.str(), std::to_string(nmax)}), [&](Report& r) {
        auto cert = seminormal_violation(m, q, nmax);
        json chain = json::array();
        for (const auto& st : cert.chain) chain.push_back({{"m", st.m}, {"from", {st.twice, st.thrice}}});
        r.bounds = {{"nmax", nmax}};
        r.witness = {{"q", q.str()}, {"violated", cert.violated}, {"initial", cert.initial}, {"chain", chain}};
        r.status = cert.violated ? Status::bounded_pass : Status::fail;
    });
}

/**
 * Parses "X^2 + X^(5/2)", "1*X^2+X^9/4" or a JSON polynomial
 * {"p":2,"terms":[...]}. Coefficients are integers, reduced mod p.
 */
inline SPoly parse_spoly(const std::string& src, std::uint64_t p) {
    std::string s;
    for (char ch : src)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (!s.empty() && s.front() == '{') {
        SPoly f = spoly_from_json(json::parse(s));
        if (f.characteristic() != p) throw domain_error("characteristic in polynomial JSON differs from <p>");
        return f;
    }
    if (s.empty() || s.back() == '+') throw domain_error("malformed polynomial '" + src + "'");
    SPoly f(p);
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find('+', i);
        if (j == std::string::npos) j = s.size();
        std::string t = s.substr(i, j - i);
        if (t.empty()) throw domain_error("malformed polynomial '" + src + "'");
        std::int64_t c = 1;
        std::size_t x = t.find('X');
        if (x == std::string::npos) x = t.find('x');
        if (x == std::string::npos) {
            f.add_term(Rat(0), std::stoll(t));
        } else {
            if (x > 0) {
                std::string cs = t.substr(0, x);
                if (cs.back() == '*') cs.pop_back();
                c = std::stoll(cs);
            }
            std::string rest = t.substr(x + 1);
            Rat e(1);
            if (!rest.empty()) {
                if (rest[0] != '^') throw domain_error("malformed term '" + t + "'");
                std::string es = rest.substr(1);
                if (es.size() > 2 && es.front() == '(' && es.back() == ')') es = es.substr(1, es.size() - 2);
                e = Rat::parse(es);
            }
            f.add_term(e, c);
        }
        i = j + 1;
    }
    return f;
}

inline std::string spoly_text(const SPoly& f) {
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        if (!out.empty()) out += "+";
        if (c != 1) out += std::to_string(c) + "*";
        out += "X^(" + e.str() + ")";
    }
    return out.empty() ? "0" : out;
}

/// Largest p^n for which the Frobenius route is also checked against repeated multiplication.
inline constexpr long kMaxFoldProduct = 4096;

inline Report ass(const QMonoid& m, const SPoly& f, long nmax) {
    const std::uint64_t p = f.characteristic();
    return timed("s21.lemma-ass", replay_for(m, {"s21", "ass", spoly_text(f), std::to_string(p), std::to_string(nmax)}),
                 [&](Report& r) {
                     auto res = monomial_associate(f, m, nmax);
                     r.bounds = {{"nmax", nmax}};
                     if (!res) {
                         r.status = Status::fail;
                         r.witness = {{"poly", to_json(f)}, {"n", nullptr}};
                         return;
                     }
                     json support = json::array();
                     for (const auto& e : res->unit_support) support.push_back(e.str());
                     r.witness = {{"poly", to_json(f)}, {"n", res->n}, {"s", res->s.str()}, {"unit_support", support}};
                     BigInt times = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(res->n));
                     bool frob_ok = true;
                     if (times <= kMaxFoldProduct) {
                         SPoly g = f.scaled_by_inverse(f.terms().begin()->second);
                         frob_ok = frobenius_power(g, res->n) == power_by_multiplication(g, res->n);
                         r.witness["frobenius_matches_product"] = frob_ok;
                     }
                     r.status = frob_ok ? Status::bounded_pass : Status::fail;
                 });
}

// ---------------------------------------------------------------------------
// Desk-scale sweeps.

/// All a/2^k with 0 <= a/2^k <= hi and k <= kmax, ascending and distinct.
inline std::vector<Rat> dyadic_grid(const Rat& hi, long kmax) {
    std::vector<Rat> out;
    const Rat step = pow2(-kmax);
    for (Rat q(0); q <= hi; q += step) out.push_back(q);
    return out;
}

inline Report lemma3_desk(const QMonoid& m, const std::vector<Rat>& samples) {
    return timed("s21.lemma-semigroup.3.desk", replay_for(m, {"s21", "lemma3-desk"}), [&](Report& r) {
        json rows = json::array();
        long failures = 0;
        for (const auto& s : samples) {
            long bound = conductor_gap_bound(s);
            auto n = conductor_gap_witness(m, s, bound);
            if (!n) ++failures;
            rows.push_back({{"s", s.str()}, {"proof_bound", bound}, {"n", n ? json(*n) : json(nullptr)}});
        }
        r.witness = {{"cases", rows}, {"failures", failures}};
        r.bounds = {{"nmax", "max(ceil(s), odd part of den(s)) + 2"}};
        r.status = failures == 0 ? Status::bounded_pass : Status::fail;
    });
}

/**
 * For every dyadic q <= q_max with denominator <= 2^kmax and q not in M, a
 * nonzero s <= bound in M with q + s not in M. Cases with q outside the group
 * generated by the generators <= bound are trivially witnessed by any s and
 * are not counted; if no nontrivial case remains the sweep is vacuous and is
 * reported as undecided rather than passing.
 */
inline Report lemma2_desk(const QMonoid& m, const Rat& q_max = Rat(8), long kmax = 4, const Rat& bound = Rat(16)) {
    return timed("s21.lemma-semigroup.2.desk",
                 replay_for(m, {"s21", "lemma2-desk", "--bound", bound.str()}), [&](Report& r) {
                     long nontrivial = 0, trivial = 0, failures = 0;
                     json failed = json::array();
                     json sample = json::array();
                     for (const auto& q : dyadic_grid(q_max, kmax)) {
                         if (m.contains(q)) continue;
                         if (!m.group_contains(q, bound)) {
                             ++trivial;
                             continue;
                         }
                         ++nontrivial;
                         auto s = divisorial_gap_witness(m, q, bound);
                         if (!s) {
                             ++failures;
                             failed.push_back(q.str());
                         } else if (sample.size() < 8) {
                             sample.push_back({{"q", q.str()}, {"witness_s", s->str()}});
                         }
                     }
                     r.bounds = {{"q_max", q_max.str()}, {"denominator_max", (Rat(1) / pow2(-kmax)).str()},
                                 {"search_bound", bound.str()}, {"monoid", monoid_descriptor(m)}};
                     r.witness = {{"nontrivial_cases", nontrivial},
                                  {"outside_group_cases", trivial},
                                  {"failures", failures},
                                  {"failed_q", failed},
                                  {"sample", sample},
                                  {"vacuous", nontrivial == 0}};
                     if (failures > 0) r.status = Status::fail;
                     else if (nontrivial == 0) r.status = Status::undecided;
                     else r.status = Status::bounded_pass;
                 });
}

/**
 * Random F_2 polynomials with at most `max_terms` terms, exponents a/16 in
 * [0, 8] and lowest exponent in M.
 */
inline std::vector<SPoly> random_ass_polys(const QMonoid& m, std::uint64_t seed, int count, int max_terms = 3,
                                           long kmax = 4, std::uint64_t p = 2) {
    std::mt19937_64 rng(seed);
    const Rat step = pow2(-kmax);
    std::vector<Rat> lows;
    for (const auto& x : m.elements_up_to(Rat(6)))
        if (x.den() <= (BigInt(1) << kmax)) lows.push_back(x);
    std::vector<SPoly> out;
    for (int i = 0; i < count; ++i) {
        SPoly f(p);
        const Rat low = lows[std::uniform_int_distribution<std::size_t>(0, lows.size() - 1)(rng)];
        f.add_term(low, 1);
        int terms = std::uniform_int_distribution<int>(1, max_terms)(rng);
        while (static_cast<int>(f.terms().size()) < terms) {
            long k = std::uniform_int_distribution<long>(1, 2L << (kmax + 1))(rng);
            f.add_term(low + Rat(k) * step, static_cast<std::int64_t>(std::uniform_int_distribution<std::uint64_t>(1, p - 1)(rng)));
        }
        out.push_back(std::move(f));
    }
    return out;
}

inline Report ass_desk(const QMonoid& m, std::uint64_t seed, int count, long nmax) {
    return timed("s21.lemma-ass.desk", replay_for(m, {"s21", "ass-desk", std::to_string(nmax), "--seed", std::to_string(seed), "--count", std::to_string(count)}), [&](Report& r) {
        long failures = 0, frob_mismatch = 0, max_n = 0;
        json failed = json::array();
        for (const auto& f : random_ass_polys(m, seed, count)) {
            auto res = monomial_associate(f, m, nmax);
            if (!res) {
                ++failures;
                failed.push_back(spoly_text(f));
                continue;
            }
            max_n = std::max(max_n, res->n);
            for (const auto& e : res->unit_support)
                if (!m.contains(e)) ++failures;
            if (res->cofactor.terms().begin()->first != Rat(0) || res->cofactor.terms().begin()->second != 1) ++failures;
            if (frobenius_power(f, res->n) != power_by_multiplication(f, res->n)) ++frob_mismatch;
        }
        r.bounds = {{"nmax", nmax}, {"count", count}, {"seed", seed}};
        r.witness = {{"failures", failures}, {"frobenius_mismatches", frob_mismatch}, {"max_n", max_n}, {"failed", failed}};
        r.status = failures == 0 && frob_mismatch == 0 ? Status::bounded_pass : Status::fail;
    });
}

}  // namespace sdiv::s21
