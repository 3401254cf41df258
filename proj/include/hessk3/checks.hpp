#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hessk3 {

enum class CheckStatus { Pass, Fail, Finding, Skipped };

std::string status_name(CheckStatus s);

// One verification item; "finding" marks an oracle-vs-source discrepancy and
// does not fail a run.
struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Fail;
    nlohmann::json expected;
    nlohmann::json computed;
    std::string citation;
    double elapsed_ms = 0.0;
};

struct RunConfig {
    std::vector<std::string> suites{"all"};  // all | theta | lattice | periods | invariants
    int order = 64;                          // truncation order for the theta suite
    std::uint64_t seed = 7;
    int samples = 100;
    std::string format = "text";             // text | json
    std::string emit_series;                 // optional output path for series dumps
};

// Nonempty error message when the config is rejected (unknown suite, or
// order below 16 with the theta suite selected).
std::string validate_config(const RunConfig& config);

struct Report {
    RunConfig config;
    std::vector<CheckResult> results;  // ordered by id

    int count(CheckStatus s) const;
    bool any_fail() const { return count(CheckStatus::Fail) > 0; }
};

Report run_checks(const RunConfig& config);

// Human-readable table (includes timings).
std::string render_text(const Report& report);
// Machine contract: deterministic for a fixed config and seed, so timings are
// excluded and results are keyed in id order.
nlohmann::json render_json(const Report& report);

// Canonical series dumps behind --emit-series.
nlohmann::json series_dump(int order);

}  // namespace hessk3
