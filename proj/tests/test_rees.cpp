#include <set>

#include <gtest/gtest.h>

#include "sdiv/rees_suite.hpp"

using namespace sdiv;

namespace {

// a = y^2 in the default base, so compare monomials after folding a into y.
TMono fold_a(TMono m) {
    m.base_exp = m.y_degree(2);
    m.a_exp = 0;
    return m;
}

/// Every product of at most `max_factors` level-n generators (y^2, y^3 and the T_w).
std::set<TMono> brute_force_level(std::size_t n, int max_factors) {
    std::vector<TMono> gens{TMono::y(2), TMono::y(3)};
    for (const auto& g : level_generators(n)) gens.push_back(fold_a(g));
    std::set<TMono> out;
    std::function<void(std::size_t, int, TMono)> rec = [&](std::size_t i, int left, TMono cur) {
        out.insert(cur);
        if (left == 0) return;
        for (std::size_t j = i; j < gens.size(); ++j) rec(j, left - 1, cur * gens[j]);
    };
    rec(0, max_factors, TMono::one());
    return out;
}

long factor_count(const TowerDecomposition& d) {
    long k = 0;
    for (const auto& [g, m] : d) k += m;
    return k;
}

}  // namespace

TEST(TWord, Validation) {
    EXPECT_THROW(TWord(""), domain_error);
    EXPECT_THROW(TWord("012"), domain_error);
    EXPECT_EQ(TWord::all_up_to(3).size(), 14u);
    EXPECT_TRUE(TWord("10").is_free());
    EXPECT_FALSE(TWord("01").is_free());
}

TEST(Expand, Examples) {
    EXPECT_EQ(expand("0"), TMono::var("0"));
    EXPECT_EQ(expand("1"), TMono::a() * TMono::var("0", -1));
    EXPECT_EQ(expand("11"), TMono::a() * TMono::var("0", -1) * TMono::var("10", -1));
    EXPECT_EQ(expand("11").str(), "a*T0^-1*T10^-1");
    EXPECT_EQ(expand("01"), TMono::var("0") * TMono::var("00", -1));
}

TEST(ParseTMono, RoundTripAndErrors) {
    for (const char* s : {"1", "a", "y^3", "a*T0^-1", "y^5*T0*T10^2", "a^2*y*T000^-3"}) {
        TMono m = parse_tmono(s);
        EXPECT_EQ(parse_tmono(m.str()), m) << s;
    }
    EXPECT_EQ(parse_tmono("T11"), expand("11"));
    EXPECT_EQ(parse_tmono("T_0^(-2)"), TMono::var("0", -2));
    for (const char* bad : {"Q1", "T2", "a^x", "a**y", "T", "y^"}) EXPECT_THROW(parse_tmono(bad), domain_error) << bad;
}

TEST(Identities, Examples) {
    auto one = verify_generator_identities(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(one[0].holds);
    auto two = verify_generator_identities(2);
    EXPECT_EQ(two.size(), 3u);
    EXPECT_EQ(two[1].identity, "T0 = T00*T01");
    auto three = verify_generator_identities(3);
    EXPECT_EQ(three.size(), 7u);
    for (const auto& c : three) EXPECT_TRUE(c.holds) << c.identity;
    EXPECT_THROW(verify_generator_identities(0), domain_error);
}

TEST(ReesProperty, ExpansionRecursionUpToLength5) {
    for (const auto& w : TWord::all_up_to(5)) {
        const std::string& b = w.bits();
        EXPECT_EQ(expand(b + "0") * expand(b + "1"), expand(w)) << b;
        long ae = expand(w).a_exp;
        EXPECT_TRUE(ae == 0 || ae == 1) << b;
        // a survives only along the all-ones branch: T_{u1} = T_u / T_{u0}.
        EXPECT_EQ(ae, b.find('0') == std::string::npos ? 1 : 0) << b;
    }
}

TEST(Swap, Examples) {
    EXPECT_EQ(swap_automorphism("", expand("0")), expand("1"));
    EXPECT_EQ(swap_automorphism("", expand("1")), expand("0"));
    EXPECT_EQ(swap_automorphism("0", expand("00")), TMono::var("0") * TMono::var("00", -1));
    EXPECT_EQ(swap_automorphism("0", expand("00")), expand("01"));
    TMono m = parse_tmono("a*y^2*T0^3*T10^-1*T000");
    EXPECT_EQ(swap_automorphism("", swap_automorphism("", m)), m);
    EXPECT_THROW(swap_automorphism("2", m), domain_error);
}

TEST(ReesProperty, SwapIsAnInvolutionPermutingGenerators) {
    for (std::size_t n = 1; n <= kMaxReesLevel; ++n) {
        auto gens = level_generators(n);
        std::set<TMono> all(gens.begin(), gens.end());
        ASSERT_EQ(all.size(), (1UL << (n + 1)) - 2);
        for (const auto& p : TWord::all_up_to(n - 1)) {
            std::set<TMono> image;
            for (const auto& g : gens) {
                TMono s = swap_automorphism(p.bits(), g);
                EXPECT_EQ(swap_automorphism(p.bits(), s), g);
                image.insert(s);
            }
            EXPECT_EQ(image, all) << "prefix " << p.bits();
        }
        std::set<TMono> image;
        for (const auto& g : gens) image.insert(swap_automorphism("", g));
        EXPECT_EQ(image, all);
    }
}

TEST(Membership, Examples) {
    EXPECT_TRUE(monomial_in_level(expand("11"), 2));
    EXPECT_TRUE(monomial_in_level(parse_tmono("a*T0^-1"), 1));
    for (std::size_t n = 1; n <= kMaxReesLevel; ++n) EXPECT_FALSE(monomial_in_level(TMono::var("0", -1), n));
    EXPECT_TRUE(monomial_in_level(TMono::one(), 1));
    EXPECT_FALSE(monomial_in_level(TMono::y(1), 3));
    EXPECT_THROW(monomial_in_level(TMono::var("000"), 2), domain_error);
}

TEST(Membership, DecompositionComposes) {
    for (const auto& m : monomial_window(2, 3)) {
        auto d = level_decomposition(m, 2);
        if (d) {
            EXPECT_EQ(fold_a(compose(*d)), fold_a(m)) << m.str();
        }
    }
}

TEST(ReesProperty, MembershipAgreesWithBruteForceEnumerator) {
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto oracle = brute_force_level(n, 6);
        for (const auto& m : oracle) EXPECT_TRUE(monomial_in_level(m, n)) << m.str();
        long members = 0, rejected = 0;
        for (const auto& m : monomial_window(n, 4)) {
            auto d = level_decomposition(m, n);
            if (!d) {
                ++rejected;
                EXPECT_EQ(oracle.count(fold_a(m)), 0u) << m.str();
            } else if (factor_count(*d) <= 6) {
                ++members;
                EXPECT_EQ(oracle.count(fold_a(m)), 1u) << m.str();
            }
        }
        EXPECT_GT(members, 0);
        EXPECT_GT(rejected, 0);
    }
}

TEST(ReesProperty, MembershipMonotoneInLevel) {
    for (std::size_t n = 1; n < kMaxReesLevel; ++n)
        for (const auto& m : monomial_window(n, n <= 2 ? 3 : 2))
            if (monomial_in_level(m, n)) {
                EXPECT_TRUE(monomial_in_level(m, n + 1)) << m.str();
            }
}

TEST(ColonCollapse, NoViolations) {
    for (std::size_t n : {1u, 2u}) {
        auto rep = colon_collapse_check(n, 4);
        EXPECT_TRUE(rep.violations.empty()) << n;
        EXPECT_EQ(static_cast<std::size_t>(rep.checked), monomial_window(n, 4).size());
        EXPECT_GT(rep.hypothesis_held, 0);
        EXPECT_GT(rep.outside_level, 0);
    }
    EXPECT_THROW(colon_collapse_check(5, 1), resource_error);
    EXPECT_THROW(colon_collapse_check(1, -1), domain_error);
}

TEST(Conductor, Samples) {
    auto res = conductor_membership_check(2, default_conductor_samples());
    ASSERT_EQ(res.size(), 6u);
    for (const auto& r : res) EXPECT_TRUE(r.in_level) << r.sample.str();
    EXPECT_EQ(res[0].product.y_degree(2), 3);
    EXPECT_THROW(conductor_membership_check(2, {TMono::y(-1)}), domain_error);
    EXPECT_THROW(conductor_membership_check(1, {TMono::var("00")}), domain_error);
    EXPECT_THROW(conductor_membership_check(2, {TMono::var("0", -1)}), domain_error);
    EXPECT_THROW(conductor_membership_check(5, {}), resource_error);
}

TEST(ReesBaseModel, RejectsAOutsideConductor) {
    EXPECT_THROW(ReesBase(NumericalSemigroup({2, 3}), 1), domain_error);
    EXPECT_NO_THROW(ReesBase(NumericalSemigroup({3, 4, 5}), 3));
}

TEST(ReesReports, Statuses) {
    EXPECT_EQ(rees::identities(3).status, Status::pass);
    EXPECT_THROW(rees::identities(5), resource_error);
    EXPECT_EQ(rees::member(parse_tmono("T0^-1"), 2).status, Status::fail);
    EXPECT_EQ(rees::colon_collapse(1, 4).status, Status::bounded_pass);
    EXPECT_EQ(rees::swap_permutes(kMaxReesLevel).status, Status::pass);
    EXPECT_EQ(rees::conductor(2, default_conductor_samples()).status, Status::pass);
}
