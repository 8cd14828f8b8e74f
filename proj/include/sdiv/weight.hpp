#pragma once

/**
 * @file weight.hpp
 * @brief Laurent polynomials in X_1, X_2, ... graded by w(X_n) = 1/n.
 *
 * The weight of a nonzero polynomial is its least monomial weight and the
 * w-initial form collects the terms of that weight. Both are multiplicative
 * because the grading is by a totally ordered group and F is a domain.
 *
 * Membership in A = F[X] + F(X)_{>=1} is tested termwise on Laurent
 * polynomials: a Laurent polynomial t lies in A iff each of its terms with a
 * negative exponent has weight >= 1. Sufficiency is clear. For necessity,
 * write t = p + r with p a polynomial and w(r) >= 1. Then r = t - p is a
 * Laurent polynomial whose monomials include every non-polynomial monomial
 * of t with its original coefficient (p cannot cancel them), and the weight
 * of a Laurent polynomial is the minimum weight over its distinct monomials,
 * so each such monomial has weight >= w(r) >= 1.
 */

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exact.hpp"

namespace sdiv {

/// Variable index n >= 1 -> nonzero exponent.
using ExpMap = std::map<long, long>;

/// A weight; nullopt is +infinity (the weight of 0).
struct Weight {
    std::optional<Rat> value;

    static Weight infinity() { return {}; }
    bool is_infinite() const { return !value.has_value(); }
    std::string str() const { return value ? value->str() : "inf"; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        if (!a.value || !b.value) return !a.value <=> !b.value;
        return *a.value <=> *b.value;
    }
    friend Weight operator+(const Weight& a, const Weight& b) {
        if (!a.value || !b.value) return infinity();
        return {*a.value + *b.value};
    }
};

inline Rat monomial_weight(const ExpMap& e) {
    Rat w;
    for (const auto& [n, k] : e) w += Rat(k, n);
    return w;
}

inline bool is_polynomial_monomial(const ExpMap& e) {
    for (const auto& [n, k] : e)
        if (k < 0) return false;
    return true;
}

class WLaurent {
  public:
    using Terms = std::map<ExpMap, Rat>;

    WLaurent() = default;

    static WLaurent term(const Rat& c, ExpMap e) {
        WLaurent f;
        f.add(std::move(e), c);
        return f;
    }
    static WLaurent var(long n, long k = 1) {
        if (n < 1) throw domain_error("variable index must be >= 1");
        return term(Rat(1), k == 0 ? ExpMap{} : ExpMap{{n, k}});
    }
    static WLaurent constant(const Rat& c) { return term(c, {}); }

    /**
     * Parses sums of terms such as "X1*X2^-2", "3/2*X1^2 - X2 + 1" or "X_1".
     * A term is a '*'-separated product of rationals and variables X<n>[^<int>].
     */
    static WLaurent parse(std::string_view src) {
        std::string s;
        for (char ch : src)
            if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
        if (s.empty()) throw domain_error("empty polynomial");
        WLaurent out;
        std::size_t i = 0;
        while (i < s.size()) {
            int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            }
            std::size_t j = i;
            // A term ends at the next '+'/'-' not directly after '^'.
            while (j < s.size() && !((s[j] == '+' || s[j] == '-') && j > i && s[j - 1] != '^')) ++j;
            out = out + parse_term(std::string_view(s).substr(i, j - i), sign);
            i = j;
        }
        return out;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend WLaurent operator+(const WLaurent& f, const WLaurent& g) {
        WLaurent h = f;
        for (const auto& [e, c] : g.terms_) h.add(e, c);
        return h;
    }
    friend WLaurent operator-(const WLaurent& f, const WLaurent& g) {
        WLaurent h = f;
        for (const auto& [e, c] : g.terms_) h.add(e, -c);
        return h;
    }
    friend WLaurent operator*(const WLaurent& f, const WLaurent& g) {
        WLaurent h;
        for (const auto& [e1, c1] : f.terms_)
            for (const auto& [e2, c2] : g.terms_) {
                ExpMap e = e1;
                for (const auto& [n, k] : e2)
                    if ((e[n] += k) == 0) e.erase(n);
                h.add(std::move(e), c1 * c2);
            }
        return h;
    }
    friend bool operator==(const WLaurent&, const WLaurent&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            Rat mag = c.sign() < 0 ? -c : c;
            out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
            std::string mono;
            for (const auto& [n, k] : e) {
                if (!mono.empty()) mono += "*";
                mono += "X" + std::to_string(n);
                if (k != 1) mono += "^" + std::to_string(k);
            }
            if (mono.empty()) out += mag.str();
            else if (mag == Rat(1)) out += mono;
            else out += mag.str() + "*" + mono;
        }
        return out;
    }

  private:
    static WLaurent parse_term(std::string_view t, int sign) {
        if (t.empty()) throw domain_error("malformed polynomial: empty term");
        Rat coef(sign);
        ExpMap e;
        std::size_t i = 0;
        while (i <= t.size()) {
            std::size_t j = t.find('*', i);
            if (j == std::string_view::npos) j = t.size();
            std::string_view f = t.substr(i, j - i);
            if (f.empty()) throw domain_error("malformed polynomial: empty factor in '" + std::string(t) + "'");
            if (f[0] == 'X' || f[0] == 'x') {
                std::size_t k = 1;
                if (k < f.size() && f[k] == '_') ++k;
                std::size_t caret = f.find('^');
                std::string_view idx = f.substr(k, caret == std::string_view::npos ? f.npos : caret - k);
                long n = parse_long(idx);
                long pw = 1;
                if (caret != std::string_view::npos) {
                    std::string_view ex = f.substr(caret + 1);
                    if (!ex.empty() && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
                    pw = parse_long(ex);
                }
                if (n < 1) throw domain_error("variable index must be >= 1");
                if ((e[n] += pw) == 0) e.erase(n);
            } else {
                coef *= Rat::parse(f);
            }
            i = j + 1;
        }
        return term(coef, std::move(e));
    }

    static long parse_long(std::string_view s) {
        if (s.empty()) throw domain_error("malformed polynomial: missing integer");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw domain_error("malformed polynomial: bad integer");
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw domain_error("malformed polynomial: bad integer '" + std::string(s) + "'");
        return std::stol(std::string(s));
    }

    void add(ExpMap e, const Rat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline Weight weight(const WLaurent& f) {
    Weight w;
    for (const auto& [e, c] : f.terms()) {
        Rat t = monomial_weight(e);
        if (!w.value || t < *w.value) w.value = t;
    }
    return w;
}

/// The w-initial form: all terms of minimal weight.
inline WLaurent win(const WLaurent& f) {
    Weight w = weight(f);
    WLaurent out;
    if (w.is_infinite()) return out;
    for (const auto& [e, c] : f.terms())
        if (monomial_weight(e) == *w.value) out = out + WLaurent::term(c, e);
    return out;
}

/// w(f/g) = w(f) - w(g).
inline Rat weight_of_quotient(const WLaurent& f, const WLaurent& g) {
    if (g.is_zero()) throw domain_error("weight of a quotient by zero");
    if (f.is_zero()) throw domain_error("weight_of_quotient needs a nonzero numerator");
    return *weight(f).value - *weight(g).value;
}

/// f in F[X] + F(X)_{>=1}, by the termwise criterion.
inline bool in_A(const WLaurent& f) {
    for (const auto& [e, c] : f.terms())
        if (!is_polynomial_monomial(e) && monomial_weight(e) < Rat(1)) return false;
    return true;
}

/// f in F(X)_{>=q}.
inline bool in_weight_ge(const WLaurent& f, const Rat& q) {
    Weight w = weight(f);
    return w.is_infinite() || *w.value >= q;
}

struct StripStep {
    WLaurent h;
    Weight w;
};

/// h_0 = h, h_{i+1} = h_i - win(h_i); stops after `steps` entries or at 0.
inline std::vector<StripStep> win_strip(const WLaurent& h, long steps) {
    if (steps < 1) throw domain_error("win_strip needs steps >= 1");
    std::vector<StripStep> out;
    WLaurent cur = h;
    for (long i = 0; i < steps; ++i) {
        out.push_back({cur, weight(cur)});
        if (cur.is_zero()) break;
        cur = cur - win(cur);
    }
    return out;
}

}  // namespace sdiv
