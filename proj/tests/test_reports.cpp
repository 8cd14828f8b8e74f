#include <gtest/gtest.h>

#include "sdiv/ideal_suite.hpp"
#include "sdiv/rees_suite.hpp"
#include "sdiv/s21_suite.hpp"
#include "sdiv/w22_suite.hpp"

using namespace sdiv;

TEST(Report, JsonShape) {
    Report r = s21::member(QMonoid::paper_s21(), Rat(5));
    json j = to_json(r);
    EXPECT_EQ(j["claim_id"], "s21.member");
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["witness"]["representation"], json({{"g_1", 2}}));
    EXPECT_EQ(j["replay"], json({"s21", "member", "5"}));
    EXPECT_GE(j["elapsed_ms"].get<long>(), 0);
    EXPECT_EQ(j.size(), 6u);
    EXPECT_EQ(to_string(Status::bounded_pass), "bounded-pass");
    EXPECT_TRUE(is_success(Status::bounded_pass));
    EXPECT_FALSE(is_success(Status::undecided));
}

TEST(Report, SummaryLine) {
    Report r = s21::member(QMonoid::paper_s21(), Rat(3));
    EXPECT_EQ(summary_line(r).rfind("[fail] s21.member", 0), 0u);
}

TEST(S21Reports, MonoidFlagsRoundTrip) {
    for (const QMonoid& m : {QMonoid::paper_s21(), QMonoid::integer_family(), QMonoid::finite({Rat(1, 2), Rat(3)})}) {
        QMonoid back = s21::monoid_from_flag(s21::monoid_flag(m));
        EXPECT_EQ(s21::monoid_flag(back), s21::monoid_flag(m));
    }
    EXPECT_EQ(s21::monoid_flag(QMonoid::finite({Rat(5, 2), Rat(2)})), "2,5/2");
    EXPECT_EQ(s21::replay_for(QMonoid::paper_s21(), {"s21", "x"}).size(), 2u);
    EXPECT_EQ(s21::replay_for(QMonoid::integer_family(), {"s21", "x"}).back(), "integer-family");
    EXPECT_THROW(s21::monoid_from_flag("2,,3"), domain_error);
}

TEST(S21Reports, ParseSpoly) {
    SPoly f = s21::parse_spoly("X^2 + X^(5/2)", 2);
    EXPECT_EQ(f, SPoly(2, {{Rat(2), 1}, {Rat(5, 2), 1}}));
    EXPECT_EQ(s21::parse_spoly("1*X^2+X^9/4", 2), SPoly(2, {{Rat(2), 1}, {Rat(9, 4), 1}}));
    EXPECT_EQ(s21::parse_spoly("2*X + 4", 3), SPoly(3, {{Rat(1), 2}, {Rat(0), 1}}));
    EXPECT_EQ(s21::parse_spoly(s21::spoly_text(f), 2), f);
    EXPECT_THROW(s21::parse_spoly("X^2 + ", 2), domain_error);
    EXPECT_THROW(s21::parse_spoly("X2", 2), domain_error);
}

TEST(S21Reports, Statuses) {
    const QMonoid S = QMonoid::paper_s21();
    EXPECT_EQ(s21::lemma1(S, 2, 80).status, Status::pass);
    EXPECT_EQ(s21::lemma3(S, Rat(2), 10).status, Status::bounded_pass);
    EXPECT_EQ(s21::seminormal(S, Rat(1), 12).status, Status::bounded_pass);
    EXPECT_EQ(s21::ass(S, s21::parse_spoly("X^2 + X^(5/2)", 2), 12).status, Status::bounded_pass);
    EXPECT_EQ(s21::lemma2_desk(S).status, Status::bounded_pass);
    auto vac = s21::lemma2_desk(QMonoid::integer_family());
    EXPECT_EQ(vac.status, Status::undecided);
    EXPECT_EQ(vac.witness["vacuous"], true);
    EXPECT_EQ(s21::ass_desk(S, 1, 20, 12).status, Status::bounded_pass);
}

TEST(IdealReports, PropResultFill) {
    idealsys::PropResult empty("x");
    Report r;
    empty.fill(r, Status::pass);
    EXPECT_EQ(r.status, Status::undecided);

    idealsys::PropResult some("x");
    some.pass_case();
    some.fill(r, Status::bounded_pass);
    EXPECT_EQ(r.status, Status::bounded_pass);

    auto s = idealsys::semigroup({2, 3});
    idealsys::PropResult bad("x");
    bad.pass_case();
    bad.violation<1>({2, 3}, Ideal1::whole(s), json("big"));
    bad.violation<1>({2, 3}, Ideal1::principal(s, {5}), json("small"));
    bad.fill(r, Status::pass);
    EXPECT_EQ(r.status, Status::fail);
    EXPECT_EQ(r.witness["violations"], 2);
    EXPECT_EQ(r.witness["cases"], 3);
    EXPECT_FALSE(r.witness["minimized_counterexample"].is_null());
}

TEST(IdealReports, HarnessStatuses) {
    auto sgs = idealsys::harness_universe(20240601, 10);
    EXPECT_GE(sgs.size(), 10u);
    EXPECT_EQ(idealsys::closure_axioms(sgs, 1, 20, {"idealsys", "closure-axioms"}).status, Status::bounded_pass);
    EXPECT_EQ(idealsys::dichotomy(sgs, {"idealsys", "dichotomy"}).status, Status::pass);
    EXPECT_EQ(idealsys::krull_empty(6, {"idealsys", "krull-empty"}).status, Status::pass);
    EXPECT_TRUE(is_success(idealsys::maxstrdiv_prime(sgs, {"idealsys", "maxstrdiv-prime"}).status));
}

TEST(W22Reports, StripAndDeterminism) {
    auto r = w22::strip(WLaurent::parse("X2 + X1 + X1^2"), 16);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.witness["sequence"].size(), 4u);
    auto a = w22::strip_sweep(9, 30), b = w22::strip_sweep(9, 30);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.bounds["seed"], 9);
    EXPECT_EQ(w22::a_is_ring(4, 50).status, Status::bounded_pass);
}

TEST(ReesReports, ExpandReport) {
    auto r = rees::expand_word("11");
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.replay, (std::vector<std::string>{"rees", "expand", "11"}));
}
