#pragma once

/**
 * @file serialize.hpp
 * @brief JSON encodings for the domain types.
 *
 * Rationals are strings "p/q" ("p" for integers). Ideals are
 * {"min", "window_members", "tail_from"}, with points as plain integers in
 * dimension 1 and as arrays in dimension 2.
 */

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charp.hpp"
#include "exact.hpp"
#include "ideal.hpp"
#include "qmonoid.hpp"
#include "rees.hpp"
#include "weight.hpp"

namespace sdiv {

using json = nlohmann::json;

inline json to_json(const Rat& q) { return q.str(); }

inline Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw domain_error("expected a rational string, got " + j.dump());
}

inline json to_json(const GenMultiset& ms) {
    json out = json::object();
    for (const auto& [i, k] : ms) out["g_" + std::to_string(i)] = k;
    return out;
}

inline json monoid_descriptor(const QMonoid& m) {
    if (m.kind() == QMonoid::Kind::family) return {{"kind", m.name()}};
    json gens = json::array();
    for (const auto& g : m.finite_generators()) gens.push_back(to_json(g));
    return {{"kind", "finite"}, {"generators", gens}};
}

/// {"kind":"finite","generators":["2","5/2"]}, {"kind":"paper-s21"} or {"kind":"integer-family"}.
inline QMonoid monoid_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "paper-s21") return QMonoid::paper_s21();
    if (kind == "integer-family") return QMonoid::integer_family();
    if (kind == "finite") {
        std::vector<Rat> gens;
        for (const auto& g : j.at("generators")) gens.push_back(rat_from_json(g));
        return QMonoid::finite(std::move(gens));
    }
    throw domain_error("unknown monoid kind '" + kind + "'");
}

inline json to_json(const SPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e.str()}, {"coef", c}});
    return {{"p", f.characteristic()}, {"terms", terms}};
}

inline SPoly spoly_from_json(const json& j) {
    SPoly f(j.at("p").get<std::uint64_t>());
    for (const auto& t : j.at("terms")) f.add_term(rat_from_json(t.at("exp")), t.at("coef").get<std::int64_t>());
    return f;
}

inline json to_json(const WLaurent& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json exps = json::object();
        for (const auto& [n, k] : e) exps[std::to_string(n)] = k;
        terms.push_back({{"coef", c.str()}, {"exps", exps}});
    }
    return terms;
}

inline WLaurent wlaurent_from_json(const json& j) {
    WLaurent f;
    for (const auto& t : j) {
        ExpMap e;
        for (const auto& [n, k] : t.at("exps").items())
            if (k.get<long>() != 0) e[std::stol(n)] = k.get<long>();
        f = f + WLaurent::term(rat_from_json(t.at("coef")), e);
    }
    return f;
}

inline json to_json(const Weight& w) { return w.value ? json(w.value->str()) : json("inf"); }

inline json to_json(const TMono& m) {
    json fr = json::object();
    for (const auto& [w, e] : m.free) fr[w] = e;
    return {{"a", m.a_exp}, {"base", m.base_exp}, {"free", fr}};
}

inline TMono tmono_from_json(const json& j) {
    TMono m;
    m.a_exp = j.value("a", 0L);
    m.base_exp = j.value("base", 0L);
    if (j.contains("free"))
        for (const auto& [w, e] : j.at("free").items()) m = m * TMono::var(w, e.get<long>());
    return m;
}

template <std::size_t D>
json point_json(const Point<D>& p) {
    if constexpr (D == 1) return p[0];
    else return json(p);
}

template <std::size_t D>
json to_json(const SgIdeal<D>& e) {
    json members = json::array();
    for (const auto& x : e.window_members()) members.push_back(point_json<D>(x));
    return {{"min", point_json<D>(e.lo())}, {"window_members", members}, {"tail_from", point_json<D>(e.hi())}};
}

/// {"generators":[2,3]} -> numerical semigroup.
inline NumericalSemigroup semigroup_from_json(const json& j) {
    return NumericalSemigroup(j.at("generators").get<std::vector<long>>());
}

/// {"generators":[[3],[4]]} over a one-dimensional parent.
inline Ideal1 ideal1_from_json(const MonoidPtr<1>& s, const json& j) {
    std::vector<Point<1>> gens;
    for (const auto& g : j.at("generators")) gens.push_back(Point<1>{g.is_array() ? g.at(0).get<long>() : g.get<long>()});
    return Ideal1::from_generators(s, gens);
}

}  // namespace sdiv
