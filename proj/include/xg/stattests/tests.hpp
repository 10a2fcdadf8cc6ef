#pragma once

#include <cstdint>
#include <string>

#include "xg/stream.hpp"

namespace xg::stats {

enum class Verdict { pass, suspect, fail, not_applicable };

const char* to_string(Verdict v) noexcept;

/// fail iff p < 1e-10 or 1 - p < 1e-10; suspect iff p < 1e-4 or
/// 1 - p < 1e-4 (and not fail).
Verdict verdict_from_pvalue(double p) noexcept;

struct TestResult {
    std::string test_name;
    std::uint64_t n_consumed = 0; // bits (or words, for word-level tests)
    double statistic = 0.0;
    double p_value = 1.0;
    Verdict verdict = Verdict::pass;
};

/// Frequency test: S = sum(2b - 1), statistic |S|/sqrt(n),
/// p = erfc(|S|/sqrt(2n)).  Requires n >= 100.
TestResult monobit(BitSource& bits, std::uint64_t n);

/// Runs test with the normal approximation.  Not applicable (rather than
/// an error) when the ones proportion strays further than 2/sqrt(n)
/// from 1/2.
TestResult runs_test(BitSource& bits, std::uint64_t n);

/// Marsaglia rank test: num_matrices M x M matrices filled row-major from
/// the bit stream, ranks binned into {M, M-1, <= M-2} and chi-squared
/// against the random-matrix probabilities.  Requires num_matrices >= 38
/// and M == 32 (the binning constants are committed for M = 32).
TestResult matrix_rank_test(BitSource& bits, std::uint64_t num_matrices, unsigned m = 32);

/// Linear complexity test (Berlekamp-Massey per block, the standard
/// seven-bin chi-square scheme).  Requires block_length >= 128 and
/// num_blocks >= 38.
TestResult linear_complexity_test(BitSource& bits, unsigned block_length,
                                  std::uint64_t num_blocks);

/// Birthday spacings, summed over `rounds` independent rounds.  Each round
/// draws n_draws values of t_bits (the most significant bits of each
/// word), sorts, and counts duplicate spacings; the total is compared to
/// Poisson(rounds * lambda), lambda = n^3 / 2^{t+2}.  Throws
/// std::invalid_argument unless lambda is in [1, 16].
TestResult birthday_spacings(WordSource& words, std::uint64_t n_draws, unsigned t_bits,
                             unsigned rounds = 1);

} // namespace xg::stats
