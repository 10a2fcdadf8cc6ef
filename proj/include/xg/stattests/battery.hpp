#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xg/stattests/tests.hpp"
#include "xg/stream.hpp"

namespace xg::stats {

/// Which tests to run and with what sample sizes.  Parsable from a plain
/// key = value text file; unknown keys are rejected.
struct BatteryConfig {
    bool run_monobit = true;
    bool run_runs = true;
    bool run_matrix_rank = true;
    bool run_linear_complexity = true;
    bool run_birthday = true;

    std::uint64_t monobit_bits = 100'000'000;
    std::uint64_t runs_bits = 100'000'000;
    std::uint64_t rank_matrices = 100'000; // 32x32 => ~1.0e8 bits
    unsigned lc_block_length = 1000;
    std::uint64_t lc_blocks = 100'000; // 1e8 bits
    std::uint64_t birthday_draws = 4096;
    unsigned birthday_bits = 32; // lambda = 4 per round
    unsigned birthday_rounds = 762;

    static BatteryConfig defaults() { return {}; }
    /// Smaller sizes for unit tests (seconds, still statistically usable).
    static BatteryConfig quick();
    static BatteryConfig parse(std::istream& in);
};

struct BatteryReport {
    std::string generator_id;
    std::string params_display;
    std::uint64_t seed = 0;
    std::vector<TestResult> tests;
    Verdict overall = Verdict::pass; // fail if any test fails, else suspect if any
    unsigned num_tests = 0;          // for multiple-testing context in the report
};

/// Runs the configured tests sequentially on fresh output from `source`.
/// Deterministic for a given (generator, seed, config).
BatteryReport run_battery(WordSource& source, const BatteryConfig& config,
                          const std::string& generator_id,
                          const std::string& params_display, std::uint64_t seed);

std::string to_json(const BatteryReport& report);

} // namespace xg::stats
