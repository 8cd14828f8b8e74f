#pragma once

/**
 * @file charp.hpp
 * @brief Sparse polynomials over F_p with rational exponents.
 *
 * Elements of the monoid algebra F_p[X^G] for G a subgroup of Q. The
 * Frobenius map f -> f^p is additive in characteristic p, so
 * f^(p^n) = sum a_i^(p^n) X^(p^n s_i).
 */

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "qmonoid.hpp"

namespace sdiv {

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

__extension__ typedef unsigned __int128 uint128_mod;

/// a * b mod p without overflow.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<uint128_mod>(a) * b) % p);
}

inline std::uint64_t mod_pow(std::uint64_t b, BigInt e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if ((e & 1) != 0) r = mul_mod(r, b, p);
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    return r;
}

class SPoly {
  public:
    using Terms = std::map<Rat, std::uint64_t>;  // exponent -> nonzero coefficient in [1, p)

    explicit SPoly(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) throw domain_error("characteristic must be prime");
    }
    SPoly(std::uint64_t p, const std::vector<std::pair<Rat, std::int64_t>>& terms) : SPoly(p) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    static SPoly monomial(std::uint64_t p, const Rat& e, std::int64_t c = 1) { return SPoly(p, {{e, c}}); }
    static SPoly one(std::uint64_t p) { return monomial(p, Rat(0)); }

    std::uint64_t characteristic() const { return p_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Rat& e, std::int64_t c) {
        auto pm = static_cast<std::int64_t>(p_);
        auto r = static_cast<std::uint64_t>(((c % pm) + pm) % pm);
        add_reduced(e, r);
    }

    friend SPoly operator+(const SPoly& f, const SPoly& g) {
        check_same(f, g);
        SPoly h = f;
        for (const auto& [e, c] : g.terms_) h.add_reduced(e, c);
        return h;
    }

    friend SPoly operator*(const SPoly& f, const SPoly& g) {
        check_same(f, g);
        SPoly h(f.p_);
        for (const auto& [e1, c1] : f.terms_)
            for (const auto& [e2, c2] : g.terms_)
                h.add_reduced(e1 + e2, mul_mod(c1, c2, f.p_));
        return h;
    }

    /// Multiplies by the inverse of c in F_p.
    SPoly scaled_by_inverse(std::uint64_t c) const {
        if (c % p_ == 0) throw domain_error("zero is not invertible");
        std::uint64_t inv = mod_pow(c, BigInt(p_ - 2), p_);
        SPoly h(p_);
        for (const auto& [e, a] : terms_)
            h.add_reduced(e, mul_mod(a, inv, p_));
        return h;
    }

    friend bool operator==(const SPoly&, const SPoly&) = default;

  private:
    static void check_same(const SPoly& f, const SPoly& g) {
        if (f.p_ != g.p_) throw domain_error("characteristic mismatch");
    }

    void add_reduced(const Rat& e, std::uint64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = (it->second + c) % p_;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::uint64_t p_;
    Terms terms_;
};

inline SPoly multiply(const SPoly& f, const SPoly& g) { return f * g; }

/// f^(p^n) through the Frobenius identity.
inline SPoly frobenius_power(const SPoly& f, long n) {
    if (n < 0) throw domain_error("frobenius_power needs n >= 0");
    const std::uint64_t p = f.characteristic();
    BigInt q = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n));
    SPoly h(p);
    for (const auto& [e, c] : f.terms())
        h.add_term(e * Rat(q), static_cast<std::int64_t>(mod_pow(c, q, p)));
    return h;
}

/// f^(p^n) by repeated multiplication; the reference the Frobenius route is checked against.
inline SPoly power_by_multiplication(const SPoly& f, long n) {
    if (n < 0) throw domain_error("exponent must be nonnegative");
    BigInt times = boost::multiprecision::pow(BigInt(f.characteristic()), static_cast<unsigned>(n));
    SPoly acc = SPoly::one(f.characteristic());
    for (BigInt k = 0; k < times; ++k) acc = acc * f;
    return acc;
}

struct MonomialAssociate {
    long n = 0;                    // Frobenius steps
    Rat s;                         // p^n * s_1
    std::vector<Rat> unit_support; // exponents of the cofactor u, all in M; contains 0
    SPoly cofactor;                // u with constant term 1
};

/**
 * Least n <= n_max such that f^(p^n) = X^(p^n s_1) * u with u supported in M
 * and constant term 1, making u a unit of the localization at the monomial
 * maximal ideal. f is first normalized so that its lowest coefficient is 1.
 */
inline std::optional<MonomialAssociate> monomial_associate(const SPoly& f, const QMonoid& m, long n_max) {
    if (f.is_zero()) throw domain_error("monomial_associate of the zero polynomial");
    const auto& [s1, a1] = *f.terms().begin();
    if (s1.sign() < 0 || !m.contains(s1)) throw domain_error("lowest exponent " + s1.str() + " is not in the monoid");
    SPoly g = f.scaled_by_inverse(a1);
    for (long n = 0; n <= n_max; ++n) {
        SPoly gp = frobenius_power(g, n);
        const Rat shift = gp.terms().begin()->first;
        SPoly u(f.characteristic());
        std::vector<Rat> support;
        bool ok = true;
        for (const auto& [e, c] : gp.terms()) {
            Rat d = e - shift;
            if (!m.contains(d)) {
                ok = false;
                break;
            }
            u.add_term(d, static_cast<std::int64_t>(c));
            support.push_back(std::move(d));
        }
        if (ok) return MonomialAssociate{n, shift, std::move(support), std::move(u)};
    }
    return std::nullopt;
}

}  // namespace sdiv
