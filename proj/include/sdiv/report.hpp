#pragma once

/**
 * @file report.hpp
 * @brief Verification reports.
 *
 * "pass" is reserved for claims decided exactly. Claims that quantify over an
 * infinite range and were checked up to a bound are "bounded-pass" and carry
 * that bound. `replay` holds the CLI arguments that reproduce the report.
 */

#include <chrono>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace sdiv {

enum class Status { pass, fail, bounded_pass, undecided };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::bounded_pass: return "bounded-pass";
        case Status::undecided: return "undecided";
    }
    return "undecided";
}

inline bool is_success(Status s) { return s == Status::pass || s == Status::bounded_pass; }

struct Report {
    std::string claim_id;
    Status status = Status::undecided;
    json witness = json::object();
    json bounds = json::object();
    std::vector<std::string> replay;
    long elapsed_ms = 0;
};

inline json to_json(const Report& r) {
    return {{"claim_id", r.claim_id},  {"status", to_string(r.status)}, {"witness", r.witness},
            {"bounds", r.bounds},      {"replay", r.replay},            {"elapsed_ms", r.elapsed_ms}};
}

/// Times `body`, which fills the report.
template <class F>
Report timed(std::string claim_id, std::vector<std::string> replay, F&& body) {
    Report r;
    r.claim_id = std::move(claim_id);
    r.replay = std::move(replay);
    auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
    return r;
}

inline std::string summary_line(const Report& r) {
    return "[" + to_string(r.status) + "] " + r.claim_id + "  " + r.witness.dump();
}

}  // namespace sdiv
