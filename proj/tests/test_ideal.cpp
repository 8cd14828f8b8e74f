#include <random>
#include <set>

#include <gtest/gtest.h>

#include "sdiv/ideal_suite.hpp"

using namespace sdiv;
using namespace sdiv::idealsys;

namespace {

// Brute-force model: a subset of the integers stored on [kLo, kHi], empty below and full above.
constexpr long kLo = -80;
constexpr long kHi = 240;

struct SetZ {
    std::vector<bool> bits = std::vector<bool>(static_cast<std::size_t>(kHi - kLo + 1), false);
    bool has(long x) const { return x > kHi || (x >= kLo && bits[static_cast<std::size_t>(x - kLo)]); }
    void set(long x) { bits[static_cast<std::size_t>(x - kLo)] = true; }
    bool operator==(const SetZ&) const = default;
    bool operator<(const SetZ& o) const { return bits < o.bits; }
};

SetZ oracle_semigroup(const std::vector<long>& gens) {
    SetZ s;
    s.set(0);
    for (long x = 1; x <= kHi; ++x)
        for (long g : gens)
            if (x - g >= 0 && s.has(x - g)) {
                s.set(x);
                break;
            }
    return s;
}

SetZ oracle_ideal(const SetZ& s, const std::vector<long>& gens) {
    SetZ e;
    for (long x = kLo; x <= kHi; ++x)
        for (long g : gens)
            if (x - g >= 0 && s.has(x - g)) {
                e.set(x);
                break;
            }
    return e;
}

SetZ from_library(const Ideal1& e) {
    SetZ out;
    for (long x = kLo; x <= kHi; ++x)
        if (e.contains({x})) out.set(x);
    return out;
}

// (E : F) on the probe range; y only needs to run until F and E are both in their tails.
SetZ oracle_colon(const SetZ& e, const SetZ& f) {
    SetZ out;
    for (long x = kLo; x <= kHi; ++x) {
        bool ok = true;
        for (long y = kLo; y <= kHi && ok; ++y)
            if (f.has(y) && !e.has(x + y)) ok = false;
        if (ok) out.set(x);
    }
    return out;
}

void expect_same(const Ideal1& lib, const SetZ& oracle, const std::string& what) {
    for (long x = -40; x <= 120; ++x) ASSERT_EQ(lib.contains({x}), oracle.has(x)) << what << " at " << x;
}

Ideal1 gen_ideal(const Sg1& s, std::vector<long> gens) {
    std::vector<Point<1>> pts;
    for (long g : gens) pts.push_back({g});
    return Ideal1::from_generators(s, pts);
}

}  // namespace

TEST(NumericalSemigroup, Basics) {
    NumericalSemigroup s({5, 3, 4});
    EXPECT_EQ(s.generators(), (std::vector<long>{3, 4, 5}));
    EXPECT_EQ(s.conductor(), 3);
    EXPECT_EQ(s.frobenius(), 2);
    EXPECT_EQ(s.multiplicity(), 3);
    EXPECT_EQ(NumericalSemigroup({2, 3}).conductor(), 2);
    EXPECT_EQ(NumericalSemigroup({1}).conductor(), 0);
    EXPECT_EQ(NumericalSemigroup({2, 3, 4, 9}).minimal_generators(), (std::vector<long>{2, 3}));
    EXPECT_THROW(NumericalSemigroup({2, 4}), domain_error);
    EXPECT_THROW(NumericalSemigroup({}), domain_error);
    EXPECT_THROW(NumericalSemigroup({0, 1}), domain_error);
}

TEST(NumericalSemigroupProperty, MatchesGeneratorClosure) {
    for (const auto& gens : random_semigroups(17, 15)) {
        NumericalSemigroup s(gens);
        SetZ o = oracle_semigroup(gens);
        for (long x = -5; x <= 60; ++x) ASSERT_EQ(s.contains(x), o.has(x)) << gens_text(gens) << " " << x;
        EXPECT_FALSE(s.contains(s.frobenius()));
        EXPECT_LE(s.conductor(), kRandomMaxConductor);
    }
}

TEST(Colon, Examples) {
    Sg1 s23 = semigroup({2, 3});
    auto c = colon(Ideal1::whole(s23), Ideal1::maximal(s23));
    EXPECT_EQ(c.lo(), (Point<1>{0}));
    for (long x = 0; x < 20; ++x) EXPECT_TRUE(c.contains({x}));

    Sg1 n = semigroup({1});
    auto cn = colon(Ideal1::whole(n), Ideal1::maximal(n));
    EXPECT_FALSE(cn.contains({-2}));
    for (long x = -1; x < 20; ++x) EXPECT_TRUE(cn.contains({x}));

    EXPECT_THROW(colon(Ideal1::whole(s23), Ideal1::whole(n)), domain_error);
}

TEST(ColonProperty, AgreesWithBruteForce) {
    std::mt19937_64 rng(41);
    for (const auto& gens : harness_universe(3, 6)) {
        Sg1 s = semigroup(gens);
        SetZ so = oracle_semigroup(gens);
        for (int i = 0; i < 6; ++i) {
            Ideal1 e = random_fractional_ideal(s, rng), f = random_fractional_ideal(s, rng);
            SetZ eo = from_library(e), fo = from_library(f);
            auto em = minimal_generators(e);
            std::vector<long> eg;
            for (auto& p : em) eg.push_back(p[0]);
            ASSERT_EQ(eo, oracle_ideal(so, eg)) << gens_text(gens);
            expect_same(colon(e, f), oracle_colon(eo, fo), "colon over " + gens_text(gens));
            expect_same(colon(e, e), oracle_colon(eo, eo), "self colon");
            SetZ v = oracle_colon(from_library(Ideal1::whole(s)), oracle_colon(from_library(Ideal1::whole(s)), eo));
            expect_same(v_closure(e), v, "v over " + gens_text(gens));
        }
    }
}

TEST(VClosure, Examples) {
    Sg1 s = semigroup({3, 4, 5});
    Ideal1 e = gen_ideal(s, {3, 4});
    EXPECT_FALSE(e.contains({5}));
    EXPECT_EQ(v_closure(e), Ideal1::maximal(s));
    Ideal1 p = gen_ideal(s, {4});
    EXPECT_EQ(v_closure(p), p);
    Sg1 s23 = semigroup({2, 3});
    EXPECT_EQ(v_closure(Ideal1::maximal(s23)), Ideal1::maximal(s23));
}

TEST(TClosure, Examples) {
    Sg1 s = semigroup({3, 4, 5});
    EXPECT_EQ(t_closure(gen_ideal(s, {3, 4})), Ideal1::maximal(s));
    EXPECT_EQ(t_closure(gen_ideal(s, {7})), gen_ideal(s, {7}));
    EXPECT_EQ(t_closure(Ideal1::whole(s)), Ideal1::whole(s));
}

TEST(Strong, Examples) {
    Sg1 s23 = semigroup({2, 3}), n = semigroup({1}), s345 = semigroup({3, 4, 5});
    EXPECT_TRUE(is_strong(Ideal1::maximal(s23)));
    EXPECT_FALSE(is_strong(Ideal1::maximal(n)));
    EXPECT_FALSE(is_strong(gen_ideal(s23, {2})));
    EXPECT_THROW(is_strong(Ideal1::whole(s23)), precondition_error);
    EXPECT_THROW(is_strong(gen_ideal(s23, {-1})), precondition_error);

    EXPECT_TRUE(is_strongly_divisorial(Ideal1::maximal(s23)));
    EXPECT_FALSE(is_strongly_divisorial(Ideal1::maximal(n)));
    EXPECT_FALSE(is_strongly_divisorial(gen_ideal(s345, {3, 4})));
}

TEST(Prime, Examples) {
    for (const auto& gens : fixed_semigroups()) EXPECT_TRUE(is_prime(Ideal1::maximal(semigroup(gens)))) << gens_text(gens);
    Sg1 s23 = semigroup({2, 3});
    EXPECT_FALSE(is_prime(gen_ideal(s23, {2})));
    EXPECT_FALSE(is_prime(Ideal1::whole(s23)));
    EXPECT_THROW(is_prime(gen_ideal(s23, {-1})), domain_error);

    auto [p1, p2, i] = two_primes(product({2, 3}, {3, 4, 5}));
    EXPECT_TRUE(is_prime(p1));
    EXPECT_TRUE(is_prime(p2));
    EXPECT_FALSE(is_prime(i));
}

TEST(Radical, Examples) {
    Sg1 s23 = semigroup({2, 3});
    EXPECT_EQ(radical(gen_ideal(s23, {4})), Ideal1::maximal(s23));
    EXPECT_EQ(radical(Ideal1::whole(s23)), Ideal1::whole(s23));
    EXPECT_THROW(radical(gen_ideal(s23, {-2})), domain_error);
    auto [p1, p2, i] = two_primes(product({2, 3}, {2, 3}));
    EXPECT_EQ(radical(i), i);
}

TEST(TInvertible, Examples) {
    EXPECT_TRUE(is_t_invertible(Ideal1::maximal(semigroup({1}))));
    EXPECT_FALSE(is_t_invertible(Ideal1::maximal(semigroup({2, 3}))));
    EXPECT_TRUE(is_t_invertible(gen_ideal(semigroup({3, 4, 5}), {4})));
}

TEST(Enumerate, Examples) {
    auto l23 = enumerate_strongly_divisorial(semigroup({2, 3}), 6);
    EXPECT_NE(std::find(l23.begin(), l23.end(), Ideal1::maximal(semigroup({2, 3}))), l23.end());
    EXPECT_TRUE(enumerate_strongly_divisorial(semigroup({1}), 6).empty());
    for (const auto& gens : fixed_semigroups()) EXPECT_TRUE(enumerate_ideals(semigroup(gens), 0).empty());
    EXPECT_THROW(enumerate_ideals(semigroup({2, 3}), -1), domain_error);
}

// Every proper ideal with minimum <= b is generated by its members in [min, min + c - 1],
// so generator subsets of S cap [1, b + c - 1] reach all of them.
TEST(EnumerateProperty, CountMatchesSubsetOracle) {
    for (const auto& [gens, b] : std::vector<std::pair<std::vector<long>, long>>{{{2, 3}, 6}, {{3, 4, 5}, 5}, {{2, 5}, 4}, {{1}, 6}}) {
        Sg1 s = semigroup(gens);
        SetZ so = oracle_semigroup(gens);
        std::vector<long> pool;
        for (long x = 1; x <= b + std::max(1L, s->conductor()[0]) - 1; ++x)
            if (so.has(x)) pool.push_back(x);
        ASSERT_LE(pool.size(), 16u);
        std::set<SetZ> seen;
        for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
            std::vector<long> sub;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if ((mask >> i) & 1u) sub.push_back(pool[i]);
            if (sub.front() > b) continue;
            seen.insert(oracle_ideal(so, sub));
        }
        auto lib = enumerate_ideals(s, b);
        EXPECT_EQ(lib.size(), seen.size()) << gens_text(gens);
        std::set<SetZ> libset;
        for (const auto& e : lib) libset.insert(from_library(e));
        EXPECT_EQ(libset, seen) << gens_text(gens);
    }
}

TEST(IdealProperty, ClosureAxiomsOnRandomIdeals) {
    std::mt19937_64 rng(1009);
    long cases = 0;
    for (const auto& gens : harness_universe(5, 10)) {
        Sg1 s = semigroup(gens);
        for (int i = 0; i < 20; ++i) {
            Ideal1 e = random_fractional_ideal(s, rng), f = random_fractional_ideal(s, rng);
            Ideal1 ev = v_closure(e);
            ASSERT_TRUE(is_subset(e, ev));
            ASSERT_EQ(v_closure(ev), ev);
            Ideal1 ef = unite(e, f);
            ASSERT_TRUE(is_subset(ev, v_closure(ef)));
            Point<1> g{static_cast<long>(rng() % 7) - 3};
            ASSERT_EQ(v_closure(e.translate(g)), ev.translate(g));
            ASSERT_TRUE(is_subset(Ideal1::whole(s), colon(e, e)));
            ASSERT_TRUE(is_subset(sum(e, Ideal1::whole(s)), e));
            ++cases;
        }
    }
    EXPECT_GE(cases, 200);
}

TEST(IdealProperty, TEqualsVOnEnumeration) {
    for (const auto& gens : fixed_semigroups()) {
        Sg1 s = semigroup(gens);
        for (const auto& e : enumerate_ideals(s, default_enum_bound(s->factor(0)))) ASSERT_EQ(t_closure(e), v_closure(e));
    }
}

TEST(IdealProperty, StrongRadicalAndStrdivLemma) {
    for (const auto& gens : harness_universe(9, 4)) {
        Sg1 s = semigroup(gens);
        for (const auto& e : enumerate_ideals(s, default_enum_bound(s->factor(0)))) {
            if (!is_strong(e)) continue;
            EXPECT_TRUE(is_strong(radical(e))) << gens_text(gens);
            Ideal1 c = colon_s(e);
            for (const auto& x : c.window_members())
                if (s->contains(x) && !e.contains(x)) {
                    Ideal1 j = colon_in_s(e, x);
                    ASSERT_TRUE(is_proper(j));
                    EXPECT_TRUE(is_strong(j));
                }
        }
    }
}

TEST(IdealProperty, MaximalStronglyDivisorialArePrime) {
    for (const auto& gens : harness_universe(13, 6)) {
        Sg1 s = semigroup(gens);
        for (const auto& e : maximal_elements(enumerate_strongly_divisorial(s, default_enum_bound(s->factor(0)))))
            EXPECT_TRUE(is_prime(e)) << gens_text(gens);
    }
}

TEST(IdealProperty, Dichotomy) {
    for (const auto& gens : harness_universe(2, 8)) {
        Ideal1 m = Ideal1::maximal(semigroup(gens));
        EXPECT_NE(is_strong(m), is_t_invertible(m)) << gens_text(gens);
    }
}

TEST(IdealProperty, SumAndIntersectionAgreeWithOracle) {
    std::mt19937_64 rng(77);
    for (const auto& gens : fixed_semigroups()) {
        Sg1 s = semigroup(gens);
        for (int i = 0; i < 10; ++i) {
            Ideal1 e = random_fractional_ideal(s, rng), f = random_fractional_ideal(s, rng);
            SetZ eo = from_library(e), fo = from_library(f), so = from_library(sum(e, f));
            for (long x = -20; x <= 80; ++x) {
                bool any = false;
                for (long y = kLo; y <= x - kLo && !any; ++y) any = eo.has(y) && y <= kHi && fo.has(x - y);
                ASSERT_EQ(so.has(x), any) << x;
                ASSERT_EQ(intersect(e, f).contains({x}), eo.has(x) && fo.has(x));
                ASSERT_EQ(unite(e, f).contains({x}), eo.has(x) || fo.has(x));
            }
        }
    }
}

TEST(TwoDim, IrredundantIntersections) {
    for (const auto& [g1, g2] : default_2d_pairs()) {
        Sg2 s = product(g1, g2);
        auto [p1, p2, i] = two_primes(s);
        EXPECT_FALSE(is_subset(p1, p2));
        EXPECT_FALSE(is_subset(p2, p1));
        EXPECT_EQ(is_strong(i), is_strong(p1) && is_strong(p2));
        EXPECT_EQ(is_divisorial(i), is_divisorial(p1) && is_divisorial(p2));
        if (is_divisorial(i)) {
            EXPECT_EQ(v_closure(p1), p1);
            EXPECT_EQ(v_closure(p2), p2);
        }
        EXPECT_EQ(intersect(Ideal2::whole(s), colon(i, p2)), p1);
    }
    EXPECT_EQ(irred2d(default_2d_pairs(), {"idealsys", "irred2d"}).status, Status::pass);
}

TEST(TwoDim, StrongOnlyWhenFactorsAreNotN) {
    auto [p1, p2, i] = two_primes(product({2, 3}, {1}));
    EXPECT_TRUE(is_strong(p1));
    EXPECT_FALSE(is_strong(p2));
    EXPECT_FALSE(is_strong(i));
}

TEST(IdealSuite, ParseGens) {
    EXPECT_EQ(parse_gens("2,3"), (std::vector<long>{2, 3}));
    EXPECT_THROW(parse_gens(""), std::invalid_argument);
    EXPECT_THROW(parse_gens("2,x"), std::invalid_argument);
    EXPECT_THROW(parse_gens("2,3a"), std::invalid_argument);
    EXPECT_EQ(random_semigroups(4, 5), random_semigroups(4, 5));
}
