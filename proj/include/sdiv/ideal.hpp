#pragma once

/**
 * @file ideal.hpp
 * @brief Star-operation calculus over numerical semigroups and their products.
 *
 * A WindowMonoid<D> is a product S_1 x ... x S_D of numerical semigroups
 * (D = 1 or 2). A fractional ideal E (E + S contained in E, E nonempty and
 * bounded below) is stored in "clamped" form: a corner lo (the coordinatewise
 * minimum of E), a corner hi, and a bitmap over the box [lo, hi] with
 *
 *     x in E  <=>  x >= lo  and  bitmap[min(x, hi)] is set.
 *
 * Every finitely generated ideal has such a form: if E = U (g_j + S) then for
 * x_i >= max_j g_ji + c_i the i-th coordinate condition of every translate is
 * satisfied, so membership no longer depends on x_i. All colon, sum and
 * closure results below are computed on finite boxes chosen so that the
 * clamp property of the inputs carries over to the output; each operation
 * notes the bound it relies on. Ideals are canonicalized (minimal lo and hi)
 * so that equality is bitmap equality.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"

namespace sdiv {

template <std::size_t D>
using Point = std::array<long, D>;

template <std::size_t D>
Point<D> operator+(Point<D> a, const Point<D>& b) {
    for (std::size_t i = 0; i < D; ++i) a[i] += b[i];
    return a;
}
template <std::size_t D>
Point<D> operator-(Point<D> a, const Point<D>& b) {
    for (std::size_t i = 0; i < D; ++i) a[i] -= b[i];
    return a;
}
template <std::size_t D>
Point<D> pmin(Point<D> a, const Point<D>& b) {
    for (std::size_t i = 0; i < D; ++i) a[i] = std::min(a[i], b[i]);
    return a;
}
template <std::size_t D>
Point<D> pmax(Point<D> a, const Point<D>& b) {
    for (std::size_t i = 0; i < D; ++i) a[i] = std::max(a[i], b[i]);
    return a;
}
template <std::size_t D>
Point<D> pscale(Point<D> a, long k) {
    for (auto& v : a) v *= k;
    return a;
}
template <std::size_t D>
Point<D> pfill(long v) {
    Point<D> p;
    p.fill(v);
    return p;
}
template <std::size_t D>
bool pleq(const Point<D>& a, const Point<D>& b) {
    for (std::size_t i = 0; i < D; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Calls f(x) for every x in the box [lo, hi], last coordinate fastest.
template <std::size_t D, class F>
void for_each_point(const Point<D>& lo, const Point<D>& hi, F&& f) {
    for (std::size_t i = 0; i < D; ++i)
        if (lo[i] > hi[i]) return;
    Point<D> x = lo;
    while (true) {
        f(static_cast<const Point<D>&>(x));
        std::size_t i = D;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                break;
            }
            x[i] = lo[i];
            if (i == 0) return;
        }
    }
}

/// Same as for_each_point but stops as soon as f returns true; returns whether it did.
template <std::size_t D, class F>
bool any_point(const Point<D>& lo, const Point<D>& hi, F&& f) {
    bool hit = false;
    for (std::size_t i = 0; i < D; ++i)
        if (lo[i] > hi[i]) return false;
    Point<D> x = lo;
    while (!hit) {
        hit = f(static_cast<const Point<D>&>(x));
        std::size_t i = D;
        bool done = true;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                done = false;
                break;
            }
            x[i] = lo[i];
        }
        if (done) break;
    }
    return hit;
}

class NumericalSemigroup {
  public:
    explicit NumericalSemigroup(std::vector<long> gens) : gens_(std::move(gens)) {
        if (gens_.empty()) throw domain_error("numerical semigroup needs generators");
        long g = 0;
        for (long x : gens_) {
            if (x <= 0) throw domain_error("generators must be positive integers");
            g = std::gcd(g, x);
        }
        if (g != 1) throw domain_error("generators of a numerical semigroup must have gcd 1");
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        // Extend the table until min_gen consecutive members appear; gcd 1 guarantees this.
        const long m = gens_.front();
        table_.push_back(true);
        long run = 1;
        long x = 0;
        while (run < m) {
            ++x;
            bool in = false;
            for (long gen : gens_)
                if (gen <= x && table_[static_cast<std::size_t>(x - gen)]) {
                    in = true;
                    break;
                }
            table_.push_back(in);
            run = in ? run + 1 : 0;
        }
        conductor_ = x - m + 1;
        table_.resize(static_cast<std::size_t>(conductor_) + 1);
    }

    const std::vector<long>& generators() const { return gens_; }
    long conductor() const { return conductor_; }
    long frobenius() const { return conductor_ - 1; }
    long multiplicity() const { return gens_.front(); }

    bool contains(long x) const {
        if (x < 0) return false;
        if (x >= conductor_) return true;
        return table_[static_cast<std::size_t>(x)];
    }

    /// Minimal generating set (the embedding generators).
    std::vector<long> minimal_generators() const {
        std::vector<long> out;
        for (long g : gens_) {
            bool redundant = false;
            for (long a = 1; a < g && !redundant; ++a) redundant = contains(a) && contains(g - a);
            if (!redundant) out.push_back(g);
        }
        return out;
    }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.gens_ == b.gens_; }

  private:
    std::vector<long> gens_;
    std::vector<bool> table_;
    long conductor_ = 0;
};

/// Product of D numerical semigroups; the computable stand-in for a ring R.
template <std::size_t D>
class WindowMonoid {
  public:
    explicit WindowMonoid(std::array<NumericalSemigroup, D> factors) : factors_(std::move(factors)) {}

    static std::shared_ptr<const WindowMonoid> make(std::array<NumericalSemigroup, D> factors) {
        return std::make_shared<const WindowMonoid>(std::move(factors));
    }

    const NumericalSemigroup& factor(std::size_t i) const { return factors_[i]; }

    bool contains(const Point<D>& x) const {
        for (std::size_t i = 0; i < D; ++i)
            if (!factors_[i].contains(x[i])) return false;
        return true;
    }

    Point<D> conductor() const {
        Point<D> c;
        for (std::size_t i = 0; i < D; ++i) c[i] = factors_[i].conductor();
        return c;
    }

    /// The generators (g along axis i, zero elsewhere).
    std::vector<Point<D>> generators() const {
        std::vector<Point<D>> out;
        for (std::size_t i = 0; i < D; ++i)
            for (long g : factors_[i].generators()) {
                Point<D> p = pfill<D>(0);
                p[i] = g;
                out.push_back(p);
            }
        return out;
    }

    friend bool operator==(const WindowMonoid& a, const WindowMonoid& b) { return a.factors_ == b.factors_; }

  private:
    std::array<NumericalSemigroup, D> factors_;
};

template <std::size_t D>
using MonoidPtr = std::shared_ptr<const WindowMonoid<D>>;

template <std::size_t D>
class SgIdeal {
  public:
    /**
     * Builds the ideal whose membership is `pred` on [lo, hi], clamped at hi.
     * The caller guarantees that pred has the clamp property at hi and is
     * false below lo.
     */
    template <class Pred>
    static SgIdeal from_predicate(MonoidPtr<D> parent, Point<D> lo, Point<D> hi, Pred&& pred) {
        SgIdeal e(std::move(parent), lo, hi);
        std::size_t k = 0;
        for_each_point<D>(lo, hi, [&](const Point<D>& x) { e.bits_[k++] = pred(x) ? 1 : 0; });
        e.canonicalize();
        return e;
    }

    /// g + S.
    static SgIdeal principal(MonoidPtr<D> parent, const Point<D>& g) {
        return from_generators(std::move(parent), {g});
    }

    /// Union of translates g_j + S.
    static SgIdeal from_generators(MonoidPtr<D> parent, const std::vector<Point<D>>& gens) {
        if (gens.empty()) throw domain_error("an ideal needs at least one generator");
        Point<D> lo = gens.front();
        Point<D> hi = gens.front();
        for (const auto& g : gens) {
            lo = pmin(lo, g);
            hi = pmax(hi, g);
        }
        hi = hi + parent->conductor();
        const WindowMonoid<D>& s = *parent;
        return from_predicate(parent, lo, hi, [&](const Point<D>& x) {
            return std::any_of(gens.begin(), gens.end(), [&](const Point<D>& g) { return s.contains(x - g); });
        });
    }

    static SgIdeal whole(MonoidPtr<D> parent) { return principal(std::move(parent), pfill<D>(0)); }

    /// The maximal ideal S \ {0}.
    static SgIdeal maximal(MonoidPtr<D> parent) {
        Point<D> hi = parent->conductor() + pfill<D>(1);
        const WindowMonoid<D>& s = *parent;
        return from_predicate(parent, pfill<D>(0), hi,
                              [&](const Point<D>& x) { return x != pfill<D>(0) && s.contains(x); });
    }

    const MonoidPtr<D>& parent() const { return parent_; }
    const Point<D>& lo() const { return lo_; }
    const Point<D>& hi() const { return hi_; }

    bool contains(const Point<D>& x) const {
        for (std::size_t i = 0; i < D; ++i)
            if (x[i] < lo_[i]) return false;
        return bits_[index(pmin(x, hi_))] != 0;
    }

    /// Members inside the box [lo, hi]; everything beyond hi follows by clamping.
    std::vector<Point<D>> window_members() const {
        std::vector<Point<D>> out;
        for_each_point<D>(lo_, hi_, [&](const Point<D>& x) {
            if (contains(x)) out.push_back(x);
        });
        return out;
    }

    SgIdeal translate(const Point<D>& g) const {
        SgIdeal e = *this;
        e.lo_ = lo_ + g;
        e.hi_ = hi_ + g;
        return e;
    }

    bool is_integral() const {
        return !any_point<D>(lo_, pmax(hi_, parent_->conductor()),
                             [&](const Point<D>& x) { return contains(x) && !parent_->contains(x); });
    }

    friend bool operator==(const SgIdeal& a, const SgIdeal& b) {
        return *a.parent_ == *b.parent_ && a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.bits_ == b.bits_;
    }

    /// Ordering on the canonical encoding, for deterministic containers.
    friend bool operator<(const SgIdeal& a, const SgIdeal& b) {
        if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
        if (a.hi_ != b.hi_) return a.hi_ < b.hi_;
        return a.bits_ < b.bits_;
    }

  private:
    SgIdeal(MonoidPtr<D> parent, Point<D> lo, Point<D> hi)
        : parent_(std::move(parent)), lo_(lo), hi_(hi), bits_(box_size(lo, hi), 0) {}

    static std::size_t box_size(const Point<D>& lo, const Point<D>& hi) {
        std::size_t n = 1;
        for (std::size_t i = 0; i < D; ++i) {
            if (hi[i] < lo[i]) throw std::logic_error("inverted ideal box");
            n *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
        }
        return n;
    }

    std::size_t index(const Point<D>& x) const {
        std::size_t k = 0;
        for (std::size_t i = 0; i < D; ++i)
            k = k * static_cast<std::size_t>(hi_[i] - lo_[i] + 1) + static_cast<std::size_t>(x[i] - lo_[i]);
        return k;
    }

    // Whether the slices x_axis = a and x_axis = b of the box agree.
    bool slices_equal(std::size_t axis, long a, long b) const {
        Point<D> lo = lo_, hi = hi_;
        lo[axis] = hi[axis] = a;
        return !any_point<D>(lo, hi, [&](const Point<D>& x) {
            Point<D> y = x;
            y[axis] = b;
            return bits_[index(x)] != bits_[index(y)];
        });
    }

    bool slice_empty(std::size_t axis, long a) const {
        Point<D> lo = lo_, hi = hi_;
        lo[axis] = hi[axis] = a;
        return !any_point<D>(lo, hi, [&](const Point<D>& x) { return bits_[index(x)] != 0; });
    }

    void canonicalize() {
        if (std::none_of(bits_.begin(), bits_.end(), [](char b) { return b != 0; }))
            throw domain_error("empty ideal");
        Point<D> lo = lo_, hi = hi_;
        for (std::size_t i = 0; i < D; ++i) {
            while (lo[i] < hi_[i] && slice_empty(i, lo[i])) ++lo[i];
            while (hi[i] > lo[i] && slices_equal(i, hi[i] - 1, hi[i])) --hi[i];
        }
        if (lo == lo_ && hi == hi_) return;
        SgIdeal old = *this;
        *this = SgIdeal(parent_, lo, hi);
        std::size_t k = 0;
        for_each_point<D>(lo, hi, [&](const Point<D>& x) { bits_[k++] = old.contains(x) ? 1 : 0; });
    }

    MonoidPtr<D> parent_;
    Point<D> lo_;
    Point<D> hi_;
    std::vector<char> bits_;
};

using Ideal1 = SgIdeal<1>;
using Ideal2 = SgIdeal<2>;

template <std::size_t D>
void check_same_parent(const SgIdeal<D>& a, const SgIdeal<D>& b) {
    if (!(*a.parent() == *b.parent())) throw domain_error("ideals over different monoids");
}

template <std::size_t D>
bool is_subset(const SgIdeal<D>& a, const SgIdeal<D>& b) {
    check_same_parent(a, b);
    return !any_point<D>(pmin(a.lo(), b.lo()), pmax(a.hi(), b.hi()),
                         [&](const Point<D>& x) { return a.contains(x) && !b.contains(x); });
}

template <std::size_t D>
SgIdeal<D> intersect(const SgIdeal<D>& a, const SgIdeal<D>& b) {
    check_same_parent(a, b);
    return SgIdeal<D>::from_predicate(a.parent(), pmax(a.lo(), b.lo()), pmax(a.hi(), b.hi()),
                                      [&](const Point<D>& x) { return a.contains(x) && b.contains(x); });
}

template <std::size_t D>
SgIdeal<D> unite(const SgIdeal<D>& a, const SgIdeal<D>& b) {
    check_same_parent(a, b);
    return SgIdeal<D>::from_predicate(a.parent(), pmin(a.lo(), b.lo()), pmax(a.hi(), b.hi()),
                                      [&](const Point<D>& x) { return a.contains(x) || b.contains(x); });
}

/**
 * (E : F) = { x : x + F contained in E }.
 *
 * x + y >= lo(E) for y attaining lo(F)_i forces x >= lo(E) - lo(F). Once
 * x_i >= hi(E)_i - lo(F)_i every x_i + y_i lies in E's clamped range, so the
 * result is clamped at hi(E) - lo(F). For a fixed x, F only needs to be
 * scanned up to max(hi(F), hi(E) - x): beyond that both memberships are
 * constant along the axis.
 */
template <std::size_t D>
SgIdeal<D> colon(const SgIdeal<D>& e, const SgIdeal<D>& f) {
    check_same_parent(e, f);
    return SgIdeal<D>::from_predicate(e.parent(), e.lo() - f.lo(), e.hi() - f.lo(), [&](const Point<D>& x) {
        Point<D> top = pmax(f.hi(), e.hi() - x);
        return !any_point<D>(f.lo(), top, [&](const Point<D>& y) { return f.contains(y) && !e.contains(x + y); });
    });
}

/**
 * E + F, the ideal product. If x_i > hi(E)_i + hi(F)_i then any decomposition
 * x = y + z has y_i > hi(E)_i or z_i > hi(F)_i and can be shifted along axis i
 * in either direction, so the result is clamped at hi(E) + hi(F) + 1.
 */
template <std::size_t D>
SgIdeal<D> sum(const SgIdeal<D>& e, const SgIdeal<D>& f) {
    check_same_parent(e, f);
    return SgIdeal<D>::from_predicate(e.parent(), e.lo() + f.lo(), e.hi() + f.hi() + pfill<D>(1),
                                      [&](const Point<D>& x) {
                                          return any_point<D>(e.lo(), x - f.lo(), [&](const Point<D>& y) {
                                              return e.contains(y) && f.contains(x - y);
                                          });
                                      });
}

/// E^k as a k-fold sumset.
template <std::size_t D>
SgIdeal<D> power(const SgIdeal<D>& e, long k) {
    if (k < 1) throw domain_error("ideal power needs k >= 1");
    SgIdeal<D> acc = e;
    for (long i = 1; i < k; ++i) acc = sum(acc, e);
    return acc;
}

template <std::size_t D>
SgIdeal<D> colon_s(const SgIdeal<D>& e) {
    return colon(SgIdeal<D>::whole(e.parent()), e);
}

/// E_v = (S : (S : E)).
template <std::size_t D>
SgIdeal<D> v_closure(const SgIdeal<D>& e) {
    return colon_s(colon_s(e));
}

template <std::size_t D>
bool is_divisorial(const SgIdeal<D>& e) {
    return v_closure(e) == e;
}

/**
 * Minimal generators: members of E outside E + M. A member x with
 * x_i > hi(E)_i + max(c_i, 1) is x' + (max(c_i,1) e_i) with x' in E, so the
 * search box is [lo, hi + max(c, 1)].
 */
template <std::size_t D>
std::vector<Point<D>> minimal_generators(const SgIdeal<D>& e) {
    SgIdeal<D> em = sum(e, SgIdeal<D>::maximal(e.parent()));
    std::vector<Point<D>> out;
    for_each_point<D>(e.lo(), e.hi() + pmax(e.parent()->conductor(), pfill<D>(1)), [&](const Point<D>& x) {
        if (e.contains(x) && !em.contains(x)) out.push_back(x);
    });
    return out;
}

/// Largest generator count for which t_closure enumerates all generator subsets.
inline constexpr std::size_t kMaxTClosureGenerators = 12;

/**
 * E_t as the union of J_v over the finitely generated J contained in E. Any
 * such J lies in the ideal generated by finitely many minimal generators of
 * E, so it suffices to range over nonempty subsets of those. Since E is
 * itself finitely generated the union equals E_v; that is checked.
 */
template <std::size_t D>
SgIdeal<D> t_closure(const SgIdeal<D>& e) {
    std::vector<Point<D>> gens = minimal_generators(e);
    if (gens.size() > kMaxTClosureGenerators)
        throw resource_error("t_closure: too many minimal generators (" + std::to_string(gens.size()) + ")");
    std::optional<SgIdeal<D>> acc;
    for (unsigned long mask = 1; mask < (1UL << gens.size()); ++mask) {
        std::vector<Point<D>> sub;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if ((mask >> i) & 1UL) sub.push_back(gens[i]);
        SgIdeal<D> jv = v_closure(SgIdeal<D>::from_generators(e.parent(), sub));
        acc = acc ? unite(*acc, jv) : jv;
    }
    if (!(*acc == v_closure(e))) throw std::logic_error("t-closure differs from v-closure on a finitely generated ideal");
    return *acc;
}

template <std::size_t D>
bool is_proper(const SgIdeal<D>& e) {
    return e.is_integral() && !e.contains(pfill<D>(0));
}

template <std::size_t D>
void require_proper(const SgIdeal<D>& e) {
    if (!is_proper(e)) throw precondition_error("ideal must be a proper integral ideal");
}

/// (S : E) == (E : E).
template <std::size_t D>
bool is_strong(const SgIdeal<D>& e) {
    require_proper(e);
    return colon_s(e) == colon(e, e);
}

template <std::size_t D>
bool is_strongly_divisorial(const SgIdeal<D>& e) {
    return is_strong(e) && is_divisorial(e);
}

/**
 * x + y in E implies x in E or y in E, for x, y in S. A counterexample with
 * x_i > B_i = max(hi_i, c_i) can be moved to x_i = B_i without changing any
 * of the three memberships, so checking the box [0, B] is exact.
 */
template <std::size_t D>
bool is_prime(const SgIdeal<D>& e) {
    if (!e.is_integral()) throw domain_error("is_prime needs an integral ideal");
    if (!is_proper(e)) return false;
    const auto& s = *e.parent();
    Point<D> top = pmax(e.hi(), s.conductor());
    std::vector<Point<D>> outside;
    for_each_point<D>(pfill<D>(0), top, [&](const Point<D>& x) {
        if (s.contains(x) && !e.contains(x)) outside.push_back(x);
    });
    for (const auto& x : outside)
        for (const auto& y : outside)
            if (e.contains(x + y)) return false;
    return true;
}

/**
 * { x in S : n x in E for some n >= 1 }. For nonzero coordinates n x_i >= hi_i
 * once n > max(hi), so n ranges over [1, max(hi) + 1]; the result is clamped
 * at max(hi, c).
 */
template <std::size_t D>
SgIdeal<D> radical(const SgIdeal<D>& e) {
    if (!e.is_integral()) throw domain_error("radical needs an integral ideal");
    const auto& s = *e.parent();
    long nmax = 1;
    for (long h : e.hi()) nmax = std::max(nmax, h + 1);
    return SgIdeal<D>::from_predicate(e.parent(), pfill<D>(0), pmax(e.hi(), s.conductor()), [&](const Point<D>& x) {
        if (!s.contains(x)) return false;
        for (long n = 1; n <= nmax; ++n)
            if (e.contains(pscale(x, n))) return true;
        return false;
    });
}

/// (E + (S : E))_v == S.
template <std::size_t D>
bool is_t_invertible(const SgIdeal<D>& e) {
    return v_closure(sum(e, colon_s(e))) == SgIdeal<D>::whole(e.parent());
}

/// { y in S : y + x in E }.
template <std::size_t D>
SgIdeal<D> colon_in_s(const SgIdeal<D>& e, const Point<D>& x) {
    return intersect(SgIdeal<D>::whole(e.parent()), e.translate(pfill<D>(0) - x));
}

/// Upper bound on the number of ideals an enumeration may produce.
inline constexpr std::size_t kMaxEnumeratedIdeals = 200000;

/**
 * All proper integral ideals "generated near the origin".
 *
 * D = 1: every ideal with min(E) <= min_bound. Such an ideal is generated by
 * its members below min(E) + c, so it is determined by its trace on
 * S cap [1, min_bound + c - 1], which is an up-set for the order
 * x <= y iff y - x in S; conversely each up-set U with min U <= min_bound
 * gives the ideal U + S with that trace.
 *
 * D = 2: every ideal generated by points of S cap [0, min_bound]^2 \ {0},
 * again in bijection with up-sets of that box.
 */
template <std::size_t D>
std::vector<SgIdeal<D>> enumerate_ideals(const MonoidPtr<D>& s, long min_bound) {
    if (min_bound < 0) throw domain_error("enumeration bound must be >= 0");
    const Point<D> c = s->conductor();
    Point<D> top = pfill<D>(min_bound);
    if constexpr (D == 1) top[0] = min_bound + std::max(c[0], 1L) - 1;
    std::vector<Point<D>> cand;
    for_each_point<D>(pfill<D>(0), top, [&](const Point<D>& x) {
        if (x != pfill<D>(0) && s->contains(x)) cand.push_back(x);
    });
    std::stable_sort(cand.begin(), cand.end(), [](const Point<D>& a, const Point<D>& b) {
        return std::accumulate(a.begin(), a.end(), 0L) < std::accumulate(b.begin(), b.end(), 0L);
    });

    std::vector<SgIdeal<D>> out;
    std::vector<Point<D>> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cand.size()) {
            if (chosen.empty()) return;
            if constexpr (D == 1)
                if (chosen.front()[0] > min_bound) return;
            if (out.size() >= kMaxEnumeratedIdeals) throw resource_error("ideal enumeration exceeds its bound");
            out.push_back(SgIdeal<D>::from_generators(s, chosen));
            return;
        }
        const Point<D>& x = cand[i];
        if constexpr (D == 1)
            if (chosen.empty() && x[0] > min_bound) return;
        bool forced = std::any_of(chosen.begin(), chosen.end(), [&](const Point<D>& y) { return s->contains(x - y); });
        chosen.push_back(x);
        rec(i + 1);
        chosen.pop_back();
        if (!forced) rec(i + 1);
    };
    rec(0);
    return out;
}

template <std::size_t D>
std::vector<SgIdeal<D>> enumerate_strongly_divisorial(const MonoidPtr<D>& s, long min_bound) {
    std::vector<SgIdeal<D>> out;
    for (auto& e : enumerate_ideals(s, min_bound))
        if (is_strongly_divisorial(e)) out.push_back(std::move(e));
    return out;
}

/// Inclusion-maximal members of a family; all of them, in input order.
template <std::size_t D>
std::vector<SgIdeal<D>> maximal_elements(const std::vector<SgIdeal<D>>& family) {
    std::vector<SgIdeal<D>> out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < family.size() && !dominated; ++j)
            dominated = i != j && !(family[i] == family[j]) && is_subset(family[i], family[j]);
        if (!dominated) out.push_back(family[i]);
    }
    return out;
}

}  // namespace sdiv
