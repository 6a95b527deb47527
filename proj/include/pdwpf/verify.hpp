#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pdwpf {

// One verification case.  expected/actual are serialized values (exact "p/q"
// strings for rational checks, fixed-format floats for the numeric suite);
// note carries recorded-but-unasserted data such as degree bounds or the
// trigonometric hybrid/kostov ratio.
struct CaseResult {
    int id = 0;
    std::string name;
    std::string expected;
    std::string actual;
    std::string note;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases; // sorted by id
    bool all_pass() const;
};

// Canonical suite order; "all" concatenates these.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one suite (or every suite for "all").  The case list depends only on
// (name, max_n); each case draws from its own generator seeded with
// seed + 1000003 * case_id, so results are independent of scheduling.
// max_n = 0 keeps the per-suite default size caps; smaller values shrink
// the sweep.  Worker count comes from PDWPF_THREADS, defaulting to the
// hardware concurrency; output order is by case id regardless.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int max_n = 0);

} // namespace pdwpf
