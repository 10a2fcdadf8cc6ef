#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xg/stream.hpp"

namespace xg {

struct ThroughputReport {
    std::string generator_id;
    std::uint64_t count_per_trial = 0;
    unsigned trials = 0;
    std::vector<double> rn_per_s; // one entry per measured trial
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double coefficient_of_variation = 0.0;
    std::uint64_t sink = 0; // running XOR of every generated word
};

/// Times `trials` runs of `count` words each, after one discarded warm-up
/// trial.  Each trial's rate is the best sustained chunk rate measured on
/// thread CPU time (20 chunks per trial), which rejects scheduler noise on
/// shared machines.  Every word feeds a running XOR accumulator that is
/// carried into the report (and printed by the CLI), so generation cannot
/// be optimised away.  Requires count >= 10^6 and trials >= 3.
ThroughputReport measure_throughput(WordSource& source, const std::string& generator_id,
                                    std::uint64_t count = 100'000'000,
                                    unsigned trials = 5);

/// Ensemble variant: each trial regenerates count words split evenly
/// across the ensemble's blocks (block scaling per {1, 4, #cores} is
/// driven from the CLI).
class BlockEnsemble;
ThroughputReport measure_ensemble_throughput(BlockEnsemble& ensemble,
                                             const std::string& generator_id,
                                             std::uint64_t count = 100'000'000,
                                             unsigned trials = 5);

/// A row of the comparison table: static facts plus measured speed.
struct GeneratorSummary {
    std::string generator_id;
    std::size_t state_words = 0;
    std::string period_display;
    double rn_per_s_mean = 0.0;
};

/// Aligned plain-text table of state size, nominal period and RN/s.
std::string compare(const std::vector<GeneratorSummary>& rows);

std::string to_json(const ThroughputReport& report);

} // namespace xg
