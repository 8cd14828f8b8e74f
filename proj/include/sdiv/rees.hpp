#pragma once

/**
 * @file rees.hpp
 * @brief Exponent-level model of the iterated extended Rees tower.
 *
 * Words w over {0,1} index elements T_w. T_w is a free indeterminate when w
 * ends in 0; otherwise T_1 = a / T_0 and T_{u1} = T_u / T_{u0}. The base ring
 * A is modelled by a numerical semigroup in one variable y, with a = y^k for
 * an element k of the conductor (k >= c, so k + N is inside the semigroup).
 *
 * Level n is the monoid generated by the base semigroup and the T_w with
 * |w| <= n. Level k is level k-1 extended by Z, c/Z for every pair
 * (Z, c) = (T_{u0}, T_u) with |u| = k-1 (with c = a when k = 1), and the Z
 * do not occur at lower levels. So x * prod Z^e is in level k iff
 * x / prod_{e<0} c^{-e} is in level k-1: any decomposition uses
 * alpha Z + beta (c - Z) with alpha - beta = e, and beta = max(0, -e) is
 * optimal because c itself lies in level k-1. Peeling levels from the top
 * decides membership exactly.
 */

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "ideal.hpp"

namespace sdiv {

class TWord {
  public:
    explicit TWord(std::string bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw domain_error("T-words are nonempty");
        for (char ch : bits_)
            if (ch != '0' && ch != '1') throw domain_error("T-words are over {0,1}: '" + bits_ + "'");
    }

    const std::string& bits() const { return bits_; }
    std::size_t length() const { return bits_.size(); }
    bool is_free() const { return bits_.back() == '0'; }

    /// All words of length 1..n in shortlex order.
    static std::vector<TWord> all_up_to(std::size_t n) {
        std::vector<TWord> out;
        for (std::size_t len = 1; len <= n; ++len)
            for (unsigned long m = 0; m < (1UL << len); ++m) {
                std::string s(len, '0');
                for (std::size_t i = 0; i < len; ++i)
                    if ((m >> (len - 1 - i)) & 1UL) s[i] = '1';
                out.emplace_back(std::move(s));
            }
        return out;
    }

    friend auto operator<=>(const TWord&, const TWord&) = default;

  private:
    std::string bits_;
};

/**
 * a^a_exp * y^base_exp * prod T_v^e_v over free words v. Exponents are
 * signed so that quotients (and automorphism images) stay representable.
 */
struct TMono {
    long a_exp = 0;
    long base_exp = 0;
    std::map<std::string, long> free;

    static TMono one() { return {}; }
    static TMono a() { return {1, 0, {}}; }
    static TMono y(long k = 1) { return {0, k, {}}; }
    static TMono var(const std::string& w, long e = 1) {
        if (!TWord(w).is_free()) throw domain_error("T_" + w + " is not a free indeterminate");
        TMono m;
        if (e != 0) m.free[w] = e;
        return m;
    }

    friend TMono operator*(TMono x, const TMono& y) {
        x.a_exp += y.a_exp;
        x.base_exp += y.base_exp;
        for (const auto& [w, e] : y.free)
            if ((x.free[w] += e) == 0) x.free.erase(w);
        return x;
    }

    TMono pow(long k) const {
        TMono m;
        m.a_exp = a_exp * k;
        m.base_exp = base_exp * k;
        if (k != 0)
            for (const auto& [w, e] : free) m.free[w] = e * k;
        return m;
    }
    TMono inverse() const { return pow(-1); }

    /// Longest free word occurring; 0 when the monomial lives in the base.
    std::size_t level() const {
        std::size_t n = 0;
        for (const auto& [w, e] : free) n = std::max(n, w.size());
        return n;
    }

    /// Total y-degree once a is replaced by y^a_value.
    long y_degree(long a_value) const { return base_exp + a_value * a_exp; }

    long total_degree() const {
        long d = std::abs(a_exp) + std::abs(base_exp);
        for (const auto& [w, e] : free) d += std::abs(e);
        return d;
    }

    std::string str() const {
        std::string out;
        auto factor = [&](const std::string& name, long e) {
            if (e == 0) return;
            if (!out.empty()) out += "*";
            out += name;
            if (e != 1) out += "^" + std::to_string(e);
        };
        factor("a", a_exp);
        factor("y", base_exp);
        for (const auto& [w, e] : free) factor("T" + w, e);
        return out.empty() ? "1" : out;
    }

    friend bool operator==(const TMono&, const TMono&) = default;
    friend bool operator<(const TMono& x, const TMono& y) {
        return std::tie(x.a_exp, x.base_exp, x.free) < std::tie(y.a_exp, y.base_exp, y.free);
    }
};

/// T_w as a^delta * (Laurent monomial in free indeterminates).
inline TMono expand(const TWord& w) {
    const std::string& b = w.bits();
    if (w.is_free()) return TMono::var(b);
    std::string parent = b.substr(0, b.size() - 1);
    if (parent.empty()) return TMono::a() * TMono::var("0", -1);
    return expand(TWord(parent)) * TMono::var(parent + "0", -1);
}

inline TMono expand(const std::string& w) { return expand(TWord(w)); }

/**
 * Parses products like "a*y^3*T0^-1*T10". Non-free words such as "T11" are
 * replaced by their expansion.
 */
inline TMono parse_tmono(std::string_view src) {
    std::string s;
    for (char ch : src)
        if (ch != ' ') s.push_back(ch);
    if (s.empty() || s == "1") return TMono::one();
    TMono m;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find('*', i);
        if (j == std::string::npos) j = s.size();
        std::string f = s.substr(i, j - i);
        if (f.empty()) throw domain_error("malformed monomial '" + s + "'");
        long e = 1;
        std::size_t caret = f.find('^');
        std::string head = f.substr(0, caret);
        if (caret != std::string::npos) {
            std::string ex = f.substr(caret + 1);
            if (ex.size() > 2 && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
            try {
                std::size_t used = 0;
                e = std::stol(ex, &used);
                if (used != ex.size()) throw domain_error("");
            } catch (const std::exception&) {
                throw domain_error("malformed exponent in '" + f + "'");
            }
        }
        if (head == "a") m = m * TMono::a().pow(e);
        else if (head == "y") m = m * TMono::y().pow(e);
        else if (head.size() >= 2 && head[0] == 'T') {
            std::string w = head.substr(1);
            if (!w.empty() && w[0] == '_') w = w.substr(1);
            m = m * expand(TWord(w)).pow(e);
        } else if (head == "1" && caret == std::string::npos) {
        } else {
            throw domain_error("unknown factor '" + head + "'");
        }
        i = j + 1;
    }
    return m;
}

/// Base model A: a numerical semigroup in y, with a = y^a_value.
class ReesBase {
  public:
    ReesBase() : ReesBase(NumericalSemigroup({2, 3}), 2) {}
    ReesBase(NumericalSemigroup base, long a_value) : base_(std::move(base)), a_(a_value) {
        if (a_ <= 0 || a_ < base_.conductor())
            throw domain_error("a must be a positive element of the conductor (A : A*), i.e. >= " +
                               std::to_string(base_.conductor()));
    }

    const NumericalSemigroup& semigroup() const { return base_; }
    long a_value() const { return a_; }

  private:
    NumericalSemigroup base_;
    long a_;
};

/// Largest tower level accepted by the checks (30 T-generators at level 4).
inline constexpr std::size_t kMaxReesLevel = 4;

/// Generator name -> multiplicity: "T<word>" for tower generators, "y^<g>" for base generators.
using TowerDecomposition = std::map<std::string, long>;

/**
 * A decomposition of m as a product of level-n generators, or nullopt if m is
 * not in the level-n monoid.
 */
inline std::optional<TowerDecomposition> level_decomposition(const TMono& m, std::size_t n,
                                                             const ReesBase& base = {}) {
    if (m.level() > n) throw domain_error("monomial involves indeterminates beyond level " + std::to_string(n));
    TowerDecomposition dec;
    TMono rest = m;
    for (std::size_t k = n; k >= 1; --k) {
        // Pairs (Z, c): Z = T_{u0}, partner generator T_{u1} = c / Z.
        std::vector<std::pair<std::string, long>> layer;
        for (const auto& [w, e] : rest.free)
            if (w.size() == k) layer.emplace_back(w, e);
        for (const auto& [w, e] : layer) {
            std::string u = w.substr(0, w.size() - 1);
            rest = rest * TMono::var(w, -e);
            if (e > 0) {
                dec["T" + w] += e;
            } else {
                TMono c = u.empty() ? TMono::a() : expand(TWord(u));
                rest = rest * c.pow(e);
                dec["T" + u + "1"] += -e;
            }
        }
    }
    if (!rest.free.empty()) throw std::logic_error("level peeling left free indeterminates");
    long d = rest.y_degree(base.a_value());
    if (!base.semigroup().contains(d)) return std::nullopt;
    // Greedy split of d over the minimal generators, verified by the semigroup table.
    const auto gens = base.semigroup().minimal_generators();
    std::function<bool(long, std::size_t)> split = [&](long r, std::size_t i) -> bool {
        if (r == 0) return true;
        if (i == gens.size()) return false;
        for (long k = r / gens[i]; k >= 0; --k) {
            if (split(r - k * gens[i], i + 1)) {
                if (k > 0) dec["y^" + std::to_string(gens[i])] += k;
                return true;
            }
        }
        return false;
    };
    if (!split(d, 0)) throw std::logic_error("semigroup member without a decomposition");
    return dec;
}

inline bool monomial_in_level(const TMono& m, std::size_t n, const ReesBase& base = {}) {
    return level_decomposition(m, n, base).has_value();
}

/// Product of the generators named in a decomposition.
inline TMono compose(const TowerDecomposition& dec) {
    TMono m;
    for (const auto& [g, k] : dec) {
        if (g.rfind("y^", 0) == 0) m = m * TMono::y(std::stol(g.substr(2))).pow(k);
        else m = m * expand(TWord(g.substr(1))).pow(k);
    }
    return m;
}

/// Generators T_w, 1 <= |w| <= n, in shortlex order of w.
inline std::vector<TMono> level_generators(std::size_t n) {
    std::vector<TMono> out;
    for (const auto& w : TWord::all_up_to(n)) out.push_back(expand(w));
    return out;
}

struct IdentityCheck {
    std::string identity;  // e.g. "T0 = T00*T01"
    bool holds = false;
};

/// a = T_0 T_1 and T_w = T_{w0} T_{w1} for 1 <= |w| < n.
inline std::vector<IdentityCheck> verify_generator_identities(std::size_t n) {
    if (n < 1) throw domain_error("identities need level >= 1");
    std::vector<IdentityCheck> out;
    out.push_back({"a = T0*T1", expand("0") * expand("1") == TMono::a()});
    for (const auto& w : TWord::all_up_to(n - 1)) {
        const std::string& b = w.bits();
        out.push_back({"T" + b + " = T" + b + "0*T" + b + "1", expand(b + "0") * expand(b + "1") == expand(w)});
    }
    return out;
}

/**
 * The automorphism over A[T_u : u not below prefix] exchanging T_{prefix 0}
 * and T_{prefix 1}: it relabels the two subtrees, so free words
 * prefix 0 x 0 <-> prefix 1 x 0, and sends the free T_{prefix 0} to the
 * expansion of T_{prefix 1}.
 */
inline TMono swap_automorphism(const std::string& prefix, const TMono& m) {
    for (char ch : prefix)
        if (ch != '0' && ch != '1') throw domain_error("prefix must be a word over {0,1}");
    TMono out;
    out.a_exp = m.a_exp;
    out.base_exp = m.base_exp;
    const std::size_t k = prefix.size();
    for (const auto& [w, e] : m.free) {
        if (w.size() > k && w.compare(0, k, prefix) == 0) {
            if (w.size() == k + 1) {  // T_{prefix 0} itself
                out = out * expand(TWord(prefix + "1")).pow(e);
                continue;
            }
            std::string v = w;
            v[k] = v[k] == '0' ? '1' : '0';
            out = out * TMono::var(v, e);
        } else {
            out = out * TMono::var(w, e);
        }
    }
    return out;
}

struct CollapseViolation {
    TMono f;
    std::string reason;
};

struct CollapseReport {
    std::size_t level = 0;
    long window = 0;
    long checked = 0;
    long outside_level = 0;      // f not in level n
    long hypothesis_held = 0;    // f * T_{0^j} in level n+1 for all j <= n+1
    long evaluation_checked = 0; // members g = f*T_{0^(n+1)} of level n+1 whose Z=1 image was checked
    std::vector<CollapseViolation> violations;
};

/// Laurent monomials over level-n indeterminates and y with total degree <= window.
inline std::vector<TMono> monomial_window(std::size_t n, long window) {
    std::vector<std::string> vars;
    for (const auto& w : TWord::all_up_to(n))
        if (w.is_free()) vars.push_back(w.bits());
    std::vector<TMono> out;
    TMono cur;
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long budget) {
        if (i == vars.size()) {
            for (long b = -budget; b <= budget; ++b) {
                TMono m = cur;
                m.base_exp = b;
                out.push_back(std::move(m));
            }
            return;
        }
        for (long e = -budget; e <= budget; ++e) {
            if (e != 0) cur.free[vars[i]] = e;
            else cur.free.erase(vars[i]);
            rec(i + 1, budget - std::abs(e));
        }
        cur.free.erase(vars[i]);
    };
    rec(0, window);
    return out;
}

/**
 * Chain collapse at level n: for every f in the window over level-n
 * indeterminates, if f * T_{0^j} lies in level n+1 for all 1 <= j <= n+1
 * then f lies in level n. Independently, Z = 1 (dropping the level-(n+1)
 * indeterminates) must send each member f * T_{0^(n+1)} of level n+1 into
 * level n, and must send every level-(n+1) generator into level n.
 */
inline CollapseReport colon_collapse_check(std::size_t n, long window, const ReesBase& base = {}) {
    if (n > kMaxReesLevel) throw resource_error("tower level above " + std::to_string(kMaxReesLevel));
    if (window < 0) throw domain_error("window must be >= 0");
    CollapseReport rep;
    rep.level = n;
    rep.window = window;
    auto drop_top = [&](TMono g) {
        for (auto it = g.free.begin(); it != g.free.end();)
            it = it->first.size() == n + 1 ? g.free.erase(it) : std::next(it);
        return g;
    };
    for (const auto& w : TWord::all_up_to(n + 1))
        if (w.length() == n + 1 && !monomial_in_level(drop_top(expand(w)), n, base))
            rep.violations.push_back({expand(w), "Z=1 image of generator T" + w.bits() + " not in level n"});
    for (const auto& f : monomial_window(n, window)) {
        ++rep.checked;
        bool in_n = monomial_in_level(f, n, base);
        if (!in_n) ++rep.outside_level;
        bool hyp = true;
        for (std::size_t j = 1; j <= n + 1 && hyp; ++j)
            hyp = monomial_in_level(f * TMono::var(std::string(j, '0')), n + 1, base);
        if (hyp) ++rep.hypothesis_held;
        if (hyp && !in_n) rep.violations.push_back({f, "f*T_{0^j} in level n+1 for all j but f not in level n"});
        TMono g = f * TMono::var(std::string(n + 1, '0'));
        if (monomial_in_level(g, n + 1, base)) {
            ++rep.evaluation_checked;
            if (!monomial_in_level(drop_top(g), n, base))
                rep.violations.push_back({f, "Z=1 image of a level n+1 member not in level n"});
        }
    }
    return rep;
}

struct ConductorSampleResult {
    TMono sample;
    TMono product;  // a * sample
    bool in_level = false;
};

/**
 * Samples model almost integral elements y^b * m with b >= 0 (y is almost
 * integral over A since A* = N for a numerical semigroup) and m = the
 * a/free part, a level-n member. Checks a * sample in level n.
 */
inline std::vector<ConductorSampleResult> conductor_membership_check(std::size_t n, const std::vector<TMono>& samples,
                                                                    const ReesBase& base = {}) {
    if (n > kMaxReesLevel) throw resource_error("tower level above " + std::to_string(kMaxReesLevel));
    std::vector<ConductorSampleResult> out;
    for (const auto& s : samples) {
        if (s.base_exp < 0) throw domain_error("sample " + s.str() + " has a negative y exponent (not almost integral)");
        if (s.level() > n) throw domain_error("sample " + s.str() + " is beyond level " + std::to_string(n));
        TMono part = s;
        part.base_exp = 0;
        if (!monomial_in_level(part, n, base))
            throw domain_error("sample " + s.str() + ": tower part is not a level-" + std::to_string(n) + " member");
        TMono prod = TMono::a() * s;
        out.push_back({s, prod, monomial_in_level(prod, n, base)});
    }
    return out;
}

/// Default samples: y, y*T0, 1, y*T1, y^5*T01*T10 and y^3*T11.
inline std::vector<TMono> default_conductor_samples() {
    return {TMono::y(),
            TMono::y() * expand("0"),
            TMono::one(),
            TMono::y() * expand("1"),
            TMono::y(5) * expand("01") * expand("10"),
            TMono::y(3) * expand("11")};
}

}  // namespace sdiv
