#pragma once

/**
 * @file qmonoid.hpp
 * @brief Additive submonoids of the nonnegative rationals.
 *
 * A QMonoid is given either by a finite generator list or by a strictly
 * increasing generator family g_0 < g_1 < ... with g_n -> infinity. The main
 * instance is the dyadic family g_n = n + 1 + 1/2^n.
 *
 * Membership is decided exactly. Any representation of q only uses
 * generators <= q, so the search space is finite; it is explored
 * depth-first from the largest admissible generator down, memoized on
 * (residual, admissible prefix). A state is pruned when the residual's
 * denominator does not divide the lcm of the admissible generators'
 * denominators, since no sum of those generators can produce it.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace sdiv {

/// Generator index -> multiplicity.
using GenMultiset = std::map<std::size_t, unsigned long>;

class QMonoid {
  public:
    enum class Kind { finite, family };

    /// Monoid generated by a finite list of positive rationals.
    static QMonoid finite(std::vector<Rat> gens) {
        if (gens.empty()) throw domain_error("finite monoid needs at least one generator");
        for (const auto& g : gens)
            if (g.sign() <= 0) throw domain_error("generators must be positive, got " + g.str());
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        QMonoid m(Kind::finite, "finite");
        m.fixed_ = std::move(gens);
        return m;
    }

    /**
     * Monoid generated by a strictly increasing, unbounded family. The caller
     * guarantees monotonicity; it is spot-checked while enumerating.
     */
    static QMonoid family(std::string name, std::function<Rat(std::size_t)> gen) {
        QMonoid m(Kind::family, std::move(name));
        m.family_ = std::move(gen);
        return m;
    }

    /// S = < n + 1 + 1/2^n : n >= 0 >.
    static QMonoid paper_s21() {
        return family("paper-s21", [](std::size_t n) {
            return Rat(static_cast<long long>(n) + 1) + pow2(-static_cast<long long>(n));
        });
    }

    /// The family with the 1/2^n term dropped: < n + 1 > = N. Used as a negative control.
    static QMonoid integer_family() {
        return family("integer-family", [](std::size_t n) { return Rat(static_cast<long long>(n) + 1); });
    }

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    Rat generator(std::size_t i) const {
        if (kind_ == Kind::finite) {
            if (i >= fixed_.size()) throw domain_error("generator index out of range");
            return fixed_[i];
        }
        return family_(i);
    }

    Rat min_gen() const { return generator(0); }

    /// The generator list of a finite monoid (empty for families).
    const std::vector<Rat>& finite_generators() const { return fixed_; }

    /// Indices and values of all generators with value <= bound, ascending.
    std::vector<Rat> generators_up_to(const Rat& bound) const {
        std::vector<Rat> out;
        if (kind_ == Kind::finite) {
            for (const auto& g : fixed_)
                if (g <= bound) out.push_back(g);
            return out;
        }
        for (std::size_t n = 0;; ++n) {
            Rat g = family_(n);
            if (!out.empty() && g <= out.back())
                throw domain_error("generator family '" + name_ + "' is not strictly increasing");
            if (g > bound) break;
            out.push_back(std::move(g));
        }
        return out;
    }

    Rat value(const GenMultiset& ms) const {
        Rat v;
        for (const auto& [i, mult] : ms) v += generator(i) * Rat(static_cast<long long>(mult));
        return v;
    }

    bool contains(const Rat& q) const { return representation(q).has_value(); }

    /// A multiset of generators summing exactly to q, or nullopt if q is not a member.
    std::optional<GenMultiset> representation(const Rat& q) const {
        if (q.sign() < 0) throw domain_error("membership query for negative value " + q.str());
        if (q.is_zero()) return GenMultiset{};
        Search s(*this, q);
        if (!s.solve(q, s.gens.size())) return std::nullopt;
        return s.extract(q);
    }

    /// Distinct members in [0, bound], ascending.
    std::vector<Rat> elements_up_to(const Rat& bound) const {
        std::vector<Rat> gens = generators_up_to(bound);
        std::vector<Rat> frontier{Rat(0)};
        std::vector<Rat> all{Rat(0)};
        // Level-by-level sums; each level adds one generator >= min_gen so this terminates.
        while (!frontier.empty()) {
            std::vector<Rat> next;
            for (const auto& x : frontier)
                for (const auto& g : gens) {
                    Rat y = x + g;
                    if (y > bound) break;
                    next.push_back(std::move(y));
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            all.insert(all.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return all;
    }

    /**
     * Whether q lies in the subgroup of Q generated by the generators <= bound.
     * For a finite list with bound >= max generator this is the full group of quotients.
     */
    bool group_contains(const Rat& q, const Rat& bound) const {
        std::vector<Rat> gens = generators_up_to(bound);
        if (gens.empty()) return q.is_zero();
        // gcd of rationals: gcd(numerators over a common denominator) / common denominator.
        BigInt l = 1;
        for (const auto& g : gens) l = l / big_gcd(l, g.den()) * g.den();
        BigInt g0 = 0;
        for (const auto& g : gens) g0 = big_gcd(g0, g.num() * (l / g.den()));
        return (q / Rat(g0, l)).is_integer();
    }

    friend bool operator==(const QMonoid& a, const QMonoid& b) {
        if (a.kind_ != b.kind_ || a.name_ != b.name_) return false;
        return a.kind_ == Kind::family || a.fixed_ == b.fixed_;
    }

  private:
    QMonoid(Kind k, std::string name) : kind_(k), name_(std::move(name)), cache_(std::make_shared<Cache>()) {}

    // Shared across copies; fills are value-identical so concurrent writers agree.
    struct Cache {
        std::shared_mutex mu;
        std::map<std::pair<Rat, Rat>, bool> memo;  // (residual, largest admissible generator) -> solvable
    };

    struct Search {
        const QMonoid& m;
        std::vector<Rat> gens;
        std::vector<BigInt> prefix_lcm;

        Search(const QMonoid& mon, const Rat& q) : m(mon), gens(mon.generators_up_to(q)) {
            BigInt l = 1;
            for (const auto& g : gens) {
                l = l / big_gcd(l, g.den()) * g.den();
                prefix_lcm.push_back(l);
            }
        }

        // Can r be written with gens[0..count)?
        bool solve(const Rat& r, std::size_t count) {
            if (r.is_zero()) return true;
            while (count > 0 && gens[count - 1] > r) --count;
            if (count == 0) return false;
            if (prefix_lcm[count - 1] % r.den() != 0) return false;
            auto key = std::make_pair(r, gens[count - 1]);
            {
                std::shared_lock lk(m.cache_->mu);
                auto it = m.cache_->memo.find(key);
                if (it != m.cache_->memo.end()) return it->second;
            }
            bool ok = solve(r - gens[count - 1], count) || solve(r, count - 1);
            std::unique_lock lk(m.cache_->mu);
            m.cache_->memo.emplace(std::move(key), ok);
            return ok;
        }

        GenMultiset extract(Rat r) {
            GenMultiset out;
            std::size_t count = gens.size();
            while (!r.is_zero()) {
                while (count > 0 && gens[count - 1] > r) --count;
                if (solve(r - gens[count - 1], count)) {
                    ++out[count - 1];
                    r -= gens[count - 1];
                } else {
                    --count;
                }
            }
            return out;
        }
    };

    Kind kind_;
    std::string name_;
    std::vector<Rat> fixed_;
    std::function<Rat(std::size_t)> family_;
    std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Witness searches. Every "for all n" statement is checked up to an explicit
// bound that the caller supplies and that the result records.

/// Least k in [1, k_max] with k*q in M.
inline std::optional<long> integral_multiple_witness(const QMonoid& m, const Rat& q, long k_max) {
    if (q.sign() <= 0) throw domain_error("integral_multiple_witness needs q > 0");
    if (k_max < 1) throw domain_error("k_max must be >= 1");
    for (long k = 1; k <= k_max; ++k)
        if (m.contains(Rat(k) * q)) return k;
    return std::nullopt;
}

struct AlmostIntegralWitness {
    Rat s;
    long checked_up_to = 0;
};

/// First candidate s with s + n*q in M for every 1 <= n <= n_max.
inline std::optional<AlmostIntegralWitness> almost_integral_witness(const QMonoid& m, const Rat& q,
                                                                     const std::vector<Rat>& s_candidates,
                                                                     long n_max) {
    if (q.sign() <= 0) throw domain_error("almost_integral_witness needs q > 0");
    for (const auto& s : s_candidates)
        if (s.sign() < 0 || !m.contains(s)) throw domain_error("candidate " + s.str() + " is not in the monoid");
    for (const auto& s : s_candidates) {
        bool ok = true;
        for (long n = 1; n <= n_max && ok; ++n) ok = m.contains(s + Rat(n) * q);
        if (ok) return AlmostIntegralWitness{s, n_max};
    }
    return std::nullopt;
}

/// Least n in [1, n_max] with s + 1/2^n not in M.
inline std::optional<long> conductor_gap_witness(const QMonoid& m, const Rat& s, long n_max) {
    if (s.sign() < 0 || !m.contains(s)) throw domain_error(s.str() + " is not in the monoid");
    for (long n = 1; n <= n_max; ++n)
        if (!m.contains(s + pow2(-n))) return n;
    return std::nullopt;
}

/// The bound max(ceil(s), odd part of den(s)) + 2 used for conductor gap searches.
inline long conductor_gap_bound(const Rat& s) {
    auto sp = dyadic_split(s);
    BigInt c = s.ceil();
    BigInt b = c > sp.beta ? c : sp.beta;
    return static_cast<long>(b) + 2;
}

/// Least nonzero s in M with s <= search_bound and q + s not in M.
inline std::optional<Rat> divisorial_gap_witness(const QMonoid& m, const Rat& q, const Rat& search_bound) {
    if (q.sign() < 0) throw domain_error("divisorial_gap_witness needs q >= 0");
    if (m.contains(q)) throw precondition_error(q.str() + " is already in the monoid");
    for (const auto& s : m.elements_up_to(search_bound)) {
        if (s.is_zero()) continue;
        if (!m.contains(q + s)) return s;
    }
    return std::nullopt;
}

struct SeminormalCertificate {
    bool violated = false;
    std::vector<long> initial;  // n in [1, n_max] with n*q in M
    struct Step {
        long m, twice, thrice;
    };
    std::vector<Step> chain;  // closure additions, in order
};

/**
 * Closes T = { n <= n_max : n*q in M } under (2m, 3m in T => m in T).
 * If 1 enters the closure then q itself would have to lie in any seminormal
 * overmonoid, so q not in M certifies that M is not seminormal.
 */
inline SeminormalCertificate seminormal_violation(const QMonoid& m, const Rat& q, long n_max) {
    if (q.sign() <= 0) throw domain_error("seminormal_violation needs q > 0");
    if (m.contains(q)) throw precondition_error(q.str() + " is in the monoid");
    SeminormalCertificate cert;
    std::vector<bool> in(static_cast<std::size_t>(n_max) + 1, false);
    for (long n = 1; n <= n_max; ++n)
        if (m.contains(Rat(n) * q)) {
            in[static_cast<std::size_t>(n)] = true;
            cert.initial.push_back(n);
        }
    for (bool grew = true; grew;) {
        grew = false;
        for (long k = 1; 3 * k <= n_max; ++k) {
            auto uk = static_cast<std::size_t>(k);
            if (!in[uk] && in[2 * uk] && in[3 * uk]) {
                in[uk] = true;
                cert.chain.push_back({k, 2 * k, 3 * k});
                grew = true;
            }
        }
    }
    cert.violated = n_max >= 1 && in[1];
    return cert;
}

}  // namespace sdiv
