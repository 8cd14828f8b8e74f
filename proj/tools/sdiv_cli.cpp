// sdiv: command-line front end for the verification suites.
//
// Exit codes: 0 when every report is pass or bounded-pass, 1 otherwise,
// 2 on a usage error (bad flags or malformed input), 3 when a resource cap
// (tower level, enumeration size) is hit.

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdiv/ideal_suite.hpp"
#include "sdiv/rees_suite.hpp"
#include "sdiv/s21_suite.hpp"
#include "sdiv/w22_suite.hpp"

namespace {

using namespace sdiv;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr std::uint64_t kDefaultSeed = 20240601;

struct Globals {
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::string> bound;
    std::optional<long> level;
    std::optional<int> count;
    std::string monoid = "paper-s21";
};

long parse_long(const std::string& s, const char* what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw domain_error(std::string("malformed ") + what + " '" + s + "'");
    }
    if (used != s.size()) throw domain_error(std::string("malformed ") + what + " '" + s + "'");
    return v;
}

std::size_t parse_level(long n) {
    if (n < 0) throw domain_error("level must be >= 0");
    if (static_cast<std::size_t>(n) > kMaxReesLevel) rees::check_level(static_cast<std::size_t>(n));
    return static_cast<std::size_t>(n);
}

using Job = std::function<std::vector<Report>()>;

// ---------------------------------------------------------------------------

void add_s21(CLI::App& app, Globals& g, Job& job) {
    auto* s21 = app.add_subcommand("s21", "dyadic monoid S = <n + 1 + 1/2^n>");
    s21->require_subcommand(1);
    static std::string q, poly;
    static long n = 0, mmax = 0, nmax = -1;
    static std::uint64_t p = 2;
    auto monoid = [&g] { return s21::monoid_from_flag(g.monoid); };

    auto* member = s21->add_subcommand("member", "exact membership of q");
    member->add_option("q", q, "rational")->required();
    member->callback([&, monoid] { job = [&, monoid] { return std::vector{s21::member(monoid(), Rat::parse(q))}; }; });

    auto* represent = s21->add_subcommand("represent", "generator multiset summing to q");
    represent->add_option("q", q, "rational")->required();
    represent->callback(
        [&, monoid] { job = [&, monoid] { return std::vector{s21::represent(monoid(), Rat::parse(q))}; }; });

    auto* lemma1 = s21->add_subcommand("lemma1", "m/2^n in S for all large m");
    lemma1->add_option("n", n)->required();
    lemma1->add_option("mmax", mmax)->required();
    lemma1->callback([&, monoid] { job = [&, monoid] { return std::vector{s21::lemma1(monoid(), n, mmax)}; }; });

    auto* lemma2 = s21->add_subcommand("lemma2-witness", "nonzero s in S with q + s not in S");
    lemma2->add_option("q", q, "rational not in S")->required();
    lemma2->callback([&, monoid] {
        job = [&, monoid] {
            return std::vector{s21::lemma2_witness(monoid(), Rat::parse(q), Rat::parse(g.bound.value_or("16")))};
        };
    });

    auto* lemma3 = s21->add_subcommand("lemma3", "least n with s + 1/2^n not in S");
    lemma3->add_option("s", q, "element of S")->required();
    lemma3->add_option("nmax", nmax, "default: max(ceil s, odd part of den s) + 2");
    lemma3->callback([&, monoid] {
        job = [&, monoid] {
            Rat s = Rat::parse(q);
            return std::vector{s21::lemma3(monoid(), s, nmax >= 0 ? nmax : conductor_gap_bound(s))};
        };
    });

    auto* semi = s21->add_subcommand("seminormal", "non-seminormality certificate for q");
    semi->add_option("q", q)->required();
    semi->add_option("nmax", nmax, "default 12");
    semi->callback([&, monoid] {
        job = [&, monoid] { return std::vector{s21::seminormal(monoid(), Rat::parse(q), nmax >= 0 ? nmax : 12)}; };
    });

    auto* ass = s21->add_subcommand("ass", "Frobenius steps until f is associated with a monomial");
    ass->add_option("poly", poly, "e.g. \"X^2 + X^(5/2)\" or a JSON polynomial")->required();
    ass->add_option("p", p, "characteristic (default 2)");
    ass->add_option("nmax", nmax, "default 12");
    ass->callback([&, monoid] {
        job = [&, monoid] {
            if (!is_prime_u64(p)) throw domain_error("characteristic must be prime");
            return std::vector{s21::ass(monoid(), s21::parse_spoly(poly, p), nmax >= 0 ? nmax : 12)};
        };
    });

    auto* l2desk = s21->add_subcommand("lemma2-desk", "divisorial gap witnesses for all dyadic q <= 8, den <= 16");
    l2desk->callback([&, monoid] {
        job = [&, monoid] {
            return std::vector{s21::lemma2_desk(monoid(), Rat(8), 4, Rat::parse(g.bound.value_or("16")))};
        };
    });

    auto* l3desk = s21->add_subcommand("lemma3-desk", "conductor gaps for s in {0, 2, 5/2, 4, 5, 13/4}");
    l3desk->callback([&, monoid] {
        job = [&, monoid] {
            return std::vector{s21::lemma3_desk(monoid(), {Rat(0), Rat(2), Rat(5, 2), Rat(4), Rat(5), Rat(13, 4)})};
        };
    });

    auto* adesk = s21->add_subcommand("ass-desk", "monomial associates for seeded random F_2 polynomials");
    adesk->add_option("nmax", nmax, "default 12");
    adesk->callback([&, monoid] {
        job = [&, monoid] {
            return std::vector{s21::ass_desk(monoid(), g.seed, g.count.value_or(50), nmax >= 0 ? nmax : 12)};
        };
    });

    auto* suite = s21->add_subcommand("suite", "all desk checks for the dyadic monoid");
    suite->callback([&, monoid] {
        job = [&, monoid] {
            QMonoid m = monoid();
            return std::vector{s21::member(m, Rat(2)),
                               s21::member(m, Rat(5)),
                               s21::lemma1(m, 1, 40),
                               s21::lemma2_desk(m),
                               s21::lemma3_desk(m, {Rat(0), Rat(2), Rat(5, 2), Rat(4), Rat(5), Rat(13, 4)}),
                               s21::seminormal(m, Rat(1), 12),
                               s21::ass_desk(m, g.seed, g.count.value_or(50), 12)};
        };
    });
}

// ---------------------------------------------------------------------------

void add_idealsys(CLI::App& app, Globals& g, Job& job) {
    auto* ideal = app.add_subcommand("idealsys", "star operations over numerical semigroups");
    ideal->require_subcommand(1);
    static std::string gens, gens1, gens2, descriptor;
    static bool random = false;

    // Universe: --gens, --random (seeded), or the fixed family plus 10 random semigroups.
    auto universe = [&g] {
        if (!gens.empty()) return idealsys::SgList{idealsys::parse_gens(gens)};
        auto rs = idealsys::random_semigroups(g.seed, g.count.value_or(10));
        if (random) return rs;
        return idealsys::harness_universe(g.seed, g.count.value_or(10));
    };
    auto replay = [&g](const std::string& sub) {
        std::vector<std::string> r{"idealsys", sub};
        if (!gens.empty()) {
            r.insert(r.end(), {"--gens", gens});
            return r;
        }
        if (random) r.push_back("--random");
        r.insert(r.end(), {"--seed", std::to_string(g.seed), "--count", std::to_string(g.count.value_or(10))});
        return r;
    };
    auto per_semigroup = [](std::size_t n) { return std::max<int>(20, static_cast<int>((200 + n - 1) / n)); };

    using PropFn = Report (*)(const idealsys::SgList&, std::vector<std::string>);
    const std::vector<std::pair<std::string, PropFn>> props = {
        {"t-equals-v", idealsys::t_equals_v},         {"strdiv-lemma", idealsys::strdiv_lemma},
        {"maxstrdiv-prime", idealsys::maxstrdiv_prime}, {"divrad", idealsys::divrad},
        {"radical-of-strong", idealsys::radical_of_strong}, {"dichotomy", idealsys::dichotomy}};

    auto add_universe_flags = [](CLI::App* sub) {
        sub->add_option("--gens", gens, "semigroup generators, e.g. 2,3");
        sub->add_flag("--random", random, "only seeded random semigroups");
    };

    auto* closure = ideal->add_subcommand("closure-axioms", "v-closure axioms on random fractional ideals");
    add_universe_flags(closure);
    closure->callback([&, universe, replay, per_semigroup] {
        job = [&, universe, replay, per_semigroup] {
            auto u = universe();
            return std::vector{idealsys::closure_axioms(u, g.seed, per_semigroup(u.size()), replay("closure-axioms"))};
        };
    });

    for (const auto& [name, fn] : props) {
        auto* sub = ideal->add_subcommand(name, "property check over the semigroup universe");
        add_universe_flags(sub);
        sub->callback([&, universe, replay, name = name, fn = fn] {
            job = [universe, replay, name, fn] { return std::vector{fn(universe(), replay(name))}; };
        });
    }

    auto* irred = ideal->add_subcommand("irred2d", "irredundant intersection of two primes in S1 x S2");
    irred->add_option("--gens1", gens1);
    irred->add_option("--gens2", gens2);
    irred->callback([&] {
        job = [&] {
            if (gens1.empty() != gens2.empty()) throw domain_error("--gens1 and --gens2 go together");
            if (gens1.empty()) return std::vector{idealsys::irred2d(idealsys::default_2d_pairs(), {"idealsys", "irred2d"})};
            return std::vector{idealsys::irred2d({{idealsys::parse_gens(gens1), idealsys::parse_gens(gens2)}},
                                                 {"idealsys", "irred2d", "--gens1", gens1, "--gens2", gens2})};
        };
    });

    auto* en = ideal->add_subcommand("enumerate", "strongly divisorial ideals with minimum <= bound");
    en->add_option("--gens", gens)->required();
    en->callback([&] {
        job = [&] {
            long b = parse_long(g.bound.value_or("6"), "bound");
            if (b < 0) throw domain_error("bound must be >= 0");
            return std::vector{idealsys::enumerate(idealsys::parse_gens(gens), b,
                                                   {"idealsys", "enumerate", "--gens", gens, "--bound", std::to_string(b)})};
        };
    });

    auto* krull = ideal->add_subcommand("krull-empty", "no strongly divisorial ideals in N (minimum <= bound)");
    krull->callback([&] {
        job = [&] {
            long b = parse_long(g.bound.value_or("6"), "bound");
            if (b < 0) throw domain_error("bound must be >= 0");
            return std::vector{idealsys::krull_empty(b, {"idealsys", "krull-empty", "--bound", std::to_string(b)})};
        };
    });

    auto* show = ideal->add_subcommand("ideal", "closures and tests for one ideal given as JSON");
    show->add_option("descriptor", descriptor,
                     R"({"semigroup":{"generators":[2,3]},"ideal":{"generators":[[3],[4]]}})")
        ->required();
    show->callback([&] {
        job = [&] {
            return std::vector{timed("idealsys.ideal", {"idealsys", "ideal", descriptor}, [&](Report& r) {
                json d = json::parse(descriptor);
                auto s = WindowMonoid<1>::make({semigroup_from_json(d.at("semigroup"))});
                Ideal1 e = ideal1_from_json(s, d.at("ideal"));
                r.witness = {{"ideal", to_json(e)},
                             {"colon_S", to_json(colon_s(e))},
                             {"v_closure", to_json(v_closure(e))},
                             {"t_closure", to_json(t_closure(e))},
                             {"divisorial", is_divisorial(e)},
                             {"t_invertible", is_t_invertible(e)}};
                if (is_proper(e)) {
                    r.witness["strong"] = is_strong(e);
                    r.witness["strongly_divisorial"] = is_strongly_divisorial(e);
                    r.witness["prime"] = is_prime(e);
                    r.witness["radical"] = to_json(radical(e));
                }
                r.bounds = {{"exact", true}};
                r.status = Status::pass;
            })};
        };
    });

    auto* harness = ideal->add_subcommand("harness", "every property over the seeded universe");
    add_universe_flags(harness);
    harness->callback([&, universe, replay, per_semigroup, props] {
        job = [&, universe, replay, per_semigroup, props] {
            auto u = universe();
            std::vector<Report> out{idealsys::closure_axioms(u, g.seed, per_semigroup(u.size()), replay("closure-axioms"))};
            for (const auto& [name, fn] : props) out.push_back(fn(u, replay(name)));
            out.push_back(idealsys::krull_empty(6, {"idealsys", "krull-empty", "--bound", "6"}));
            out.push_back(idealsys::irred2d(idealsys::default_2d_pairs(), {"idealsys", "irred2d"}));
            return out;
        };
    });
}

// ---------------------------------------------------------------------------

void add_w22(CLI::App& app, Globals& g, Job& job) {
    auto* w22 = app.add_subcommand("w22", "weights w(X_n) = 1/n on Laurent polynomials");
    w22->require_subcommand(1);
    static std::string f, q;
    static long steps = 16;

    auto unary = [&](const char* name, const char* help, Report (*fn)(const WLaurent&)) {
        auto* sub = w22->add_subcommand(name, help);
        sub->add_option("f", f, "e.g. \"X1*X2^-2\"")->required();
        sub->callback([&, fn] { job = [fn] { return std::vector{fn(WLaurent::parse(f))}; }; });
    };
    unary("weight", "least monomial weight", w22::weight_of);
    unary("win", "w-initial form", w22::win_of);
    unary("member-A", "membership in A = F[X] + F(X)_{>=1}", w22::member_a);

    auto* strip = w22->add_subcommand("strip", "h_{i+1} = h_i - win(h_i)");
    strip->add_option("polynomial", f)->required();
    strip->add_option("steps", steps, "default 16");
    strip->callback([&] { job = [] { return std::vector{w22::strip(WLaurent::parse(f), steps)}; }; });

    auto* ge = w22->add_subcommand("member-ge", "membership in F(X)_{>=q}");
    ge->add_option("f", f)->required();
    ge->add_option("q", q)->required();
    ge->callback([&] { job = [] { return std::vector{w22::member_ge(WLaurent::parse(f), Rat::parse(q))}; }; });

    auto* mult = w22->add_subcommand("multiplicativity", "w and win multiplicative on seeded random pairs");
    mult->callback([&] { job = [&] { return std::vector{w22::multiplicativity(g.seed, g.count.value_or(100))}; }; });
    auto* sweep = w22->add_subcommand("strip-sweep", "stripping terminates with increasing weights");
    sweep->callback([&] { job = [&] { return std::vector{w22::strip_sweep(g.seed, g.count.value_or(100))}; }; });
    auto* ring = w22->add_subcommand("A-ring", "A closed under + and *");
    ring->callback([&] { job = [&] { return std::vector{w22::a_is_ring(g.seed, g.count.value_or(100))}; }; });
    auto* wit = w22->add_subcommand("witness", "X1/X2^2 has weight 0 and is not in A");
    wit->callback([&] { job = [] { return std::vector{w22::witness_outside_a()}; }; });

    auto* suite = w22->add_subcommand("suite", "all weight checks");
    suite->callback([&] {
        job = [&] {
            int c = g.count.value_or(100);
            return std::vector{w22::multiplicativity(g.seed, c), w22::strip_sweep(g.seed, c), w22::a_is_ring(g.seed, c),
                               w22::witness_outside_a(), w22::strip(WLaurent::parse("X2 + X1 + X1^2"), 16)};
        };
    });
}

// ---------------------------------------------------------------------------

void add_rees(CLI::App& app, Globals& g, Job& job) {
    auto* rt = app.add_subcommand("rees", "iterated extended Rees tower over <2,3>, a = y^2");
    rt->require_subcommand(1);
    static std::string word, prefix, mono;
    static long n = 0;
    static std::vector<std::string> samples;

    auto* ex = rt->add_subcommand("expand", "T_w as a^d * Laurent monomial");
    ex->add_option("word", word)->required();
    ex->callback([&] { job = [] { return std::vector{rees::expand_word(word)}; }; });

    auto* id = rt->add_subcommand("identities", "a = T0 T1 and T_w = T_w0 T_w1");
    id->add_option("n", n)->required();
    id->callback([&] { job = [] { return std::vector{rees::identities(parse_level(n))}; }; });

    auto* sw = rt->add_subcommand("swap", "swap T_{prefix 0} and T_{prefix 1}; prefix '-' is empty");
    sw->add_option("prefix", prefix)->required();
    sw->add_option("monomial", mono)->required();
    sw->callback([&] {
        job = [] { return std::vector{rees::swap(prefix == "-" ? "" : prefix, parse_tmono(mono))}; };
    });

    auto* sp = rt->add_subcommand("swap-permutes", "every swap permutes the generators, levels 1..n");
    sp->add_option("n", n, "default 4");
    sp->callback([&] {
        job = [] { return std::vector{rees::swap_permutes(parse_level(n > 0 ? n : static_cast<long>(kMaxReesLevel)))}; };
    });

    auto* mem = rt->add_subcommand("member", "monomial membership in level --level");
    mem->add_option("monomial", mono)->required();
    mem->callback([&] {
        job = [&] {
            TMono m = parse_tmono(mono);
            long lv = g.level.value_or(std::max<long>(1, static_cast<long>(m.level())));
            return std::vector{rees::member(m, parse_level(lv))};
        };
    });

    auto* cc = rt->add_subcommand("colon-collapse", "chain colon collapse at level n, window --bound (default 4)");
    cc->add_option("n", n)->required();
    cc->callback([&] {
        job = [&] {
            long w = parse_long(g.bound.value_or("4"), "window");
            return std::vector{rees::colon_collapse(parse_level(n), w)};
        };
    });

    auto* cd = rt->add_subcommand("conductor", "a * sample in level n for almost integral samples");
    cd->add_option("n", n)->required();
    cd->add_option("samples", samples, "monomials; default y, y*T0, 1, y*T1, y^5*T01*T10, y^3*T11");
    cd->callback([&] {
        job = [] {
            std::vector<TMono> ms;
            for (const auto& s : samples) ms.push_back(parse_tmono(s));
            if (ms.empty()) ms = default_conductor_samples();
            return std::vector{rees::conductor(parse_level(n), ms)};
        };
    });

    auto* suite = rt->add_subcommand("suite", "all tower checks");
    suite->callback([&] {
        job = [] {
            std::vector<Report> out;
            for (std::size_t k = 1; k <= kMaxReesLevel; ++k) out.push_back(rees::identities(k));
            out.push_back(rees::swap_permutes(kMaxReesLevel));
            out.push_back(rees::colon_collapse(1, 4));
            out.push_back(rees::colon_collapse(2, 4));
            out.push_back(rees::conductor(2, default_conductor_samples()));
            return out;
        };
    });
}

void print(const std::vector<Report>& reports, const Globals& g) {
    for (const auto& r : reports) {
        if (g.json) std::cout << to_json(r).dump() << "\n";
        else std::cout << summary_line(r) << "\n";
    }
    if (!g.json) {
        long ok = std::count_if(reports.begin(), reports.end(), [](const Report& r) { return is_success(r.status); });
        std::cout << ok << "/" << reports.size() << " reports pass or bounded-pass\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for strongly divisorial ideal constructions"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "newline-delimited JSON reports");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--bound", g.bound, "search bound (meaning depends on the subcommand)");
    app.add_option("--level", g.level, "tower level");
    app.add_option("--count", g.count, "number of random cases");
    app.add_option("--monoid", g.monoid, "paper-s21, integer-family, a generator list or a JSON descriptor");

    Job job;
    add_s21(app, g, job);
    add_idealsys(app, g, job);
    add_w22(app, g, job);
    add_rees(app, g, job);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        std::vector<Report> reports = job();
        std::stable_sort(reports.begin(), reports.end(),
                         [](const Report& a, const Report& b) { return a.claim_id < b.claim_id; });
        print(reports, g);
        bool all_ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return is_success(r.status); });
        return all_ok ? 0 : kExitFail;
    } catch (const resource_error& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kExitResource;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const precondition_error& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
