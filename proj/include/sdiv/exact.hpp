#pragma once

/**
 * @file exact.hpp
 * @brief Exact rational and dyadic arithmetic.
 *
 * Rat is always kept reduced with a positive denominator; zero is 0/1.
 * Dyadic stores odd * 2^-k and is the natural number type for monoids whose
 * group of quotients is Z[1/2].
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdiv {

using BigInt = boost::multiprecision::cpp_int;

/// Raised on inputs outside an operation's domain (negative exponents, mismatched parents, ...).
class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised when a caller-supplied precondition fails (e.g. q already in the monoid).
class precondition_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Raised when a search or enumeration would exceed its configured resource bound.
class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rat(long long n, long long d) : Rat(BigInt(n), BigInt(d)) {}

    /// Parses "p", "-p" or "p/q" (whitespace not allowed).
    static Rat parse(std::string_view s) {
        auto parse_int = [](std::string_view t) {
            if (t.empty()) throw domain_error("malformed rational: empty component");
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) throw domain_error("malformed rational: sign without digits");
            for (std::size_t j = i; j < t.size(); ++j)
                if (t[j] < '0' || t[j] > '9')
                    throw domain_error("malformed rational: '" + std::string(t) + "'");
            BigInt v(std::string(t.substr(i)));
            return t[0] == '-' ? BigInt(-v) : v;
        };
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rat(parse_int(s));
        BigInt d = parse_int(s.substr(slash + 1));
        if (d == 0) throw domain_error("malformed rational: zero denominator");
        return Rat(parse_int(s.substr(0, slash)), d);
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    BigInt floor() const {
        BigInt q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }
    BigInt ceil() const {
        BigInt q = num_ / den_;
        if (num_ > 0 && q * den_ != num_) ++q;
        return q;
    }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    Rat operator-() const { return Rat(BigInt(-num_), den_, raw_tag{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        if (a.den_ == b.den_) return Rat(a.num_ + b.num_, a.den_);
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw domain_error("division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        BigInt l = a.num_ * b.den_;
        BigInt r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  private:
    struct raw_tag {};
    Rat(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = big_gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline std::strong_ordering rat_cmp(const Rat& a, const Rat& b) { return a <=> b; }

inline Rat pow2(long long k) {
    BigInt p = 1;
    p <<= static_cast<unsigned>(k < 0 ? -k : k);
    return k >= 0 ? Rat(p) : Rat(BigInt(1), p);
}

/// Exponent of the largest power of two dividing a nonzero integer.
inline unsigned two_adic_valuation(const BigInt& n) {
    if (n == 0) throw domain_error("2-adic valuation of zero");
    return static_cast<unsigned>(boost::multiprecision::lsb(n < 0 ? BigInt(-n) : n));
}

/// q = alpha / (2^k * beta) with beta odd and positive.
struct DyadicSplit {
    BigInt alpha;
    BigInt beta;
    unsigned k = 0;
    bool operator==(const DyadicSplit&) const = default;
};

inline DyadicSplit dyadic_split(const Rat& q) {
    unsigned k = two_adic_valuation(q.den());
    return {q.num(), q.den() >> k, k};
}

/// Value odd * 2^-k; zero is stored as (0, 0).
class Dyadic {
  public:
    Dyadic() = default;
    Dyadic(BigInt odd, long long k) : odd_(std::move(odd)), k_(k) { normalize(); }

    static bool representable(const Rat& q) { return q.is_zero() || dyadic_split(q).beta == 1; }

    static Dyadic from_rat(const Rat& q) {
        if (q.is_zero()) return {};
        auto sp = dyadic_split(q);
        if (sp.beta != 1) throw domain_error("not a dyadic rational: " + q.str());
        return Dyadic(sp.alpha, static_cast<long long>(sp.k));
    }

    Rat to_rat() const { return Rat(odd_) * pow2(-k_); }

    const BigInt& odd_num() const { return odd_; }
    long long two_exp() const { return k_; }

    friend bool operator==(const Dyadic&, const Dyadic&) = default;

  private:
    void normalize() {
        if (odd_ == 0) {
            k_ = 0;
            return;
        }
        unsigned v = two_adic_valuation(odd_);
        odd_ >>= v;
        k_ -= v;
    }

    BigInt odd_ = 0;
    long long k_ = 0;
};

}  // namespace sdiv

template <>
struct std::hash<sdiv::Rat> {
    std::size_t operator()(const sdiv::Rat& r) const noexcept {
        std::size_t h1 = boost::multiprecision::hash_value(r.num());
        std::size_t h2 = boost::multiprecision::hash_value(r.den());
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};
