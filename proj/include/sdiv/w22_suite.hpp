#pragma once

// Reports for the weight calculus: single queries plus the seeded desk sweeps.

#include <random>
#include <string>
#include <vector>

#include "report.hpp"
#include "weight.hpp"

namespace sdiv::w22 {

inline Report weight_of(const WLaurent& f) {
    return timed("w22.weight", {"w22", "weight", f.str()}, [&](Report& r) {
        r.witness = {{"f", f.str()}, {"weight", to_json(weight(f))}};
        r.bounds = {{"exact", true}};
        r.status = Status::pass;
    });
}

inline Report win_of(const WLaurent& f) {
    return timed("w22.win", {"w22", "win", f.str()}, [&](Report& r) {
        WLaurent w = win(f);
        r.witness = {{"f", f.str()}, {"win", w.str()}, {"terms", to_json(w)}, {"weight", to_json(weight(f))}};
        r.bounds = {{"exact", true}};
        r.status = Status::pass;
    });
}

/// Passes when the stripped weights strictly increase.
inline Report strip(const WLaurent& h, long steps) {
    return timed("w22.strip", {"w22", "strip", h.str(), std::to_string(steps)}, [&](Report& r) {
        auto seq = win_strip(h, steps);
        json rows = json::array();
        bool increasing = true;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            rows.push_back({{"h", seq[i].h.str()}, {"weight", to_json(seq[i].w)}});
            if (i > 0 && !(seq[i - 1].w < seq[i].w)) increasing = false;
        }
        r.witness = {{"sequence", rows}, {"strictly_increasing", increasing}, {"reached_zero", seq.back().h.is_zero()}};
        r.bounds = {{"steps", steps}};
        r.status = increasing ? Status::pass : Status::fail;
    });
}

/// Membership in A; "fail" means f is not in A.
inline Report member_a(const WLaurent& f) {
    return timed("w22.member-A", {"w22", "member-A", f.str()}, [&](Report& r) {
        const bool in = in_A(f);
        json offending = json::array();
        for (const auto& [e, c] : f.terms())
            if (!is_polynomial_monomial(e) && monomial_weight(e) < Rat(1))
                offending.push_back(WLaurent::term(c, e).str());
        r.witness = {{"f", f.str()}, {"member", in}, {"weight", to_json(weight(f))}, {"low_weight_laurent_terms", offending}};
        r.bounds = {{"exact", true}};
        r.status = in ? Status::pass : Status::fail;
    });
}

/// Membership in F(X)_{>=q}; "fail" means w(f) < q.
inline Report member_ge(const WLaurent& f, const Rat& q) {
    return timed("w22.member-ge", {"w22", "member-ge", f.str(), q.str()}, [&](Report& r) {
        const bool in = in_weight_ge(f, q);
        r.witness = {{"f", f.str()}, {"q", q.str()}, {"member", in}, {"weight", to_json(weight(f))}};
        r.bounds = {{"exact", true}};
        r.status = in ? Status::pass : Status::fail;
    });
}

// ---------------------------------------------------------------------------
// Seeded sweeps.

/// Random Laurent polynomial: 1-4 terms, variables X1..X5, exponents in [-2, 3], coefficients +-p/q.
inline WLaurent random_laurent(std::mt19937_64& rng, int max_terms = 4, long max_var = 5) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<long> var(1, max_var), exp(-2, 3), num(1, 9), den(1, 4), nvars(0, 3);
    WLaurent f;
    while (f.is_zero()) {
        int k = nterms(rng);
        for (int t = 0; t < k; ++t) {
            ExpMap e;
            long nv = nvars(rng);
            for (long i = 0; i < nv; ++i) {
                long x = exp(rng);
                if (x != 0) e[var(rng)] = x;
            }
            Rat c(num(rng), den(rng));
            if (rng() & 1) c = -c;
            f = f + WLaurent::term(c, e);
        }
    }
    return f;
}

/// Random element of A: random terms, keeping only those the termwise criterion admits.
inline WLaurent random_in_a(std::mt19937_64& rng) {
    for (;;) {
        WLaurent f = random_laurent(rng);
        WLaurent g;
        for (const auto& [e, c] : f.terms())
            if (is_polynomial_monomial(e) || monomial_weight(e) >= Rat(1)) g = g + WLaurent::term(c, e);
        if (!g.is_zero()) return g;
    }
}

/// w(fg) = w(f) + w(g), win(fg) = win(f) win(g) and win(win(f)) = win(f).
inline Report multiplicativity(std::uint64_t seed, int pairs) {
    return timed("w22.multiplicativity", {"w22", "multiplicativity", "--seed", std::to_string(seed), "--count", std::to_string(pairs)}, [&](Report& r) {
        std::mt19937_64 rng(seed);
        long weight_fail = 0, win_fail = 0, idem_fail = 0;
        json first = nullptr;
        for (int i = 0; i < pairs; ++i) {
            WLaurent f = random_laurent(rng), g = random_laurent(rng);
            WLaurent fg = f * g;
            bool wok = weight(fg) == weight(f) + weight(g);
            bool iok = win(fg) == win(f) * win(g);
            bool dok = win(win(f)) == win(f);
            weight_fail += !wok;
            win_fail += !iok;
            idem_fail += !dok;
            if ((!wok || !iok || !dok) && first.is_null()) first = {{"f", f.str()}, {"g", g.str()}};
        }
        r.bounds = {{"pairs", pairs}, {"seed", seed}, {"max_terms", 4}, {"max_variable", 5}};
        r.witness = {{"weight_failures", weight_fail},
                     {"win_failures", win_fail},
                     {"idempotence_failures", idem_fail},
                     {"first_failure", first}};
        r.status = weight_fail + win_fail + idem_fail == 0 ? Status::bounded_pass : Status::fail;
    });
}

/// win_strip weights strictly increase and reach zero on random polynomials.
inline Report strip_sweep(std::uint64_t seed, int count) {
    return timed("w22.strip-sweep", {"w22", "strip-sweep", "--seed", std::to_string(seed), "--count", std::to_string(count)}, [&](Report& r) {
        std::mt19937_64 rng(seed);
        long failures = 0;
        json first = nullptr;
        for (int i = 0; i < count; ++i) {
            WLaurent h = random_laurent(rng);
            auto seq = win_strip(h, static_cast<long>(h.terms().size()) + 1);
            bool ok = seq.back().h.is_zero();
            for (std::size_t k = 1; k < seq.size(); ++k) ok = ok && seq[k - 1].w < seq[k].w;
            if (!ok) {
                ++failures;
                if (first.is_null()) first = h.str();
            }
        }
        r.bounds = {{"count", count}, {"seed", seed}};
        r.witness = {{"failures", failures}, {"first_failure", first}};
        r.status = failures == 0 ? Status::bounded_pass : Status::fail;
    });
}

/// A is closed under + and * on random pairs of members.
inline Report a_is_ring(std::uint64_t seed, int pairs) {
    return timed("w22.A-ring", {"w22", "A-ring", "--seed", std::to_string(seed), "--count", std::to_string(pairs)}, [&](Report& r) {
        std::mt19937_64 rng(seed);
        long failures = 0;
        json first = nullptr;
        for (int i = 0; i < pairs; ++i) {
            WLaurent f = random_in_a(rng), g = random_in_a(rng);
            if (!in_A(f + g) || !in_A(f * g)) {
                ++failures;
                if (first.is_null()) first = {{"f", f.str()}, {"g", g.str()}};
            }
        }
        r.bounds = {{"pairs", pairs}, {"seed", seed}};
        r.witness = {{"failures", failures}, {"first_failure", first}};
        r.status = failures == 0 ? Status::bounded_pass : Status::fail;
    });
}

/// X1/X2^2 has weight 0, so it lies in F(X)_{>=0}, and it is not in A.
inline Report witness_outside_a() {
    return timed("w22.witness", {"w22", "witness"}, [&](Report& r) {
        WLaurent f = WLaurent::parse("X1*X2^-2");
        const bool ge0 = in_weight_ge(f, Rat(0));
        const bool in = in_A(f);
        r.witness = {{"f", f.str()}, {"weight", to_json(weight(f))}, {"in_weight_ge_0", ge0}, {"in_A", in}};
        r.bounds = {{"exact", true}};
        r.status = ge0 && !in && weight(f) == Weight{Rat(0)} ? Status::pass : Status::fail;
    });
}

}  // namespace sdiv::w22
