#include "xg/stattests/tests.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "xg/stattests/gf2.hpp"
#include "xg/stattests/pvalues.hpp"

namespace xg::stats {

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::suspect: return "suspect";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

Verdict verdict_from_pvalue(double p) noexcept {
    double tail = std::min(p, 1.0 - p);
    if (tail < 1e-10)
        return Verdict::fail;
    if (tail < 1e-4)
        return Verdict::suspect;
    return Verdict::pass;
}

TestResult monobit(BitSource& bits, std::uint64_t n) {
    if (n < 100)
        throw std::invalid_argument("monobit needs n >= 100");
    std::int64_t s = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        s += bits.next_bit() ? 1 : -1;
    const double abs_s = std::fabs(static_cast<double>(s));
    TestResult r;
    r.test_name = "monobit";
    r.n_consumed = n;
    r.statistic = abs_s / std::sqrt(static_cast<double>(n));
    r.p_value = std::erfc(abs_s / std::sqrt(2.0 * static_cast<double>(n)));
    r.verdict = verdict_from_pvalue(r.p_value);
    return r;
}

TestResult runs_test(BitSource& bits, std::uint64_t n) {
    if (n < 100)
        throw std::invalid_argument("runs test needs n >= 100");
    std::uint64_t ones = 0;
    std::uint64_t runs = 1;
    unsigned prev = bits.next_bit();
    ones += prev;
    for (std::uint64_t i = 1; i < n; ++i) {
        unsigned b = bits.next_bit();
        ones += b;
        runs += b != prev;
        prev = b;
    }
    TestResult r;
    r.test_name = "runs";
    r.n_consumed = n;
    const double nn = static_cast<double>(n);
    const double pi = static_cast<double>(ones) / nn;
    if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(nn)) {
        // Frequency precondition failed; the monobit test reports that.
        r.statistic = static_cast<double>(runs);
        r.p_value = 0.0;
        r.verdict = Verdict::not_applicable;
        return r;
    }
    const double v = static_cast<double>(runs);
    r.statistic = v;
    r.p_value = std::erfc(std::fabs(v - 2.0 * nn * pi * (1.0 - pi)) /
                          (2.0 * std::sqrt(2.0 * nn) * pi * (1.0 - pi)));
    r.verdict = verdict_from_pvalue(r.p_value);
    return r;
}

TestResult matrix_rank_test(BitSource& bits, std::uint64_t num_matrices, unsigned m) {
    if (m != 32)
        throw std::invalid_argument("rank test binning constants are committed for M = 32");
    if (num_matrices < 38)
        throw std::invalid_argument("rank test needs >= 38 matrices");

    // P(rank = 32), P(rank = 31), remainder, from the product formula
    // prod_{i=0}^{r-1} (1 - 2^{i-M})^2 / (1 - 2^{i-r}) * 2^{r(2M-r)-M^2}.
    constexpr double p_full = 0.288788095153841;
    constexpr double p_minus1 = 0.577576190173205;
    constexpr double p_rest = 0.133635714672954;

    std::uint64_t counts[3] = {0, 0, 0};
    std::vector<std::uint64_t> rows(m);
    for (std::uint64_t k = 0; k < num_matrices; ++k) {
        for (unsigned i = 0; i < m; ++i) {
            std::uint64_t row = 0;
            for (unsigned j = 0; j < m; ++j)
                row = (row << 1) | bits.next_bit();
            rows[i] = row;
        }
        unsigned rank = gf2_rank(rows, m);
        if (rank == m)
            ++counts[0];
        else if (rank == m - 1)
            ++counts[1];
        else
            ++counts[2];
    }

    const double nm = static_cast<double>(num_matrices);
    const double expected[3] = {nm * p_full, nm * p_minus1, nm * p_rest};
    double chi2 = 0.0;
    for (int i = 0; i < 3; ++i) {
        double diff = static_cast<double>(counts[i]) - expected[i];
        chi2 += diff * diff / expected[i];
    }

    TestResult r;
    r.test_name = "matrix_rank";
    r.n_consumed = num_matrices * m * m;
    r.statistic = chi2;
    r.p_value = chi_square_pvalue(chi2, 2);
    r.verdict = verdict_from_pvalue(r.p_value);
    return r;
}

TestResult linear_complexity_test(BitSource& bits, unsigned block_length,
                                  std::uint64_t num_blocks) {
    if (block_length < 128)
        throw std::invalid_argument("linear complexity test needs K >= 128");
    if (num_blocks < 38)
        throw std::invalid_argument("linear complexity test needs >= 38 blocks");

    const double k = static_cast<double>(block_length);
    const double sign = (block_length % 2 == 0) ? 1.0 : -1.0;
    // Expected complexity of a random K-bit block.
    const double mu = k / 2.0 + (9.0 - sign) / 36.0 -
                      (k / 3.0 + 2.0 / 9.0) / std::pow(2.0, k > 1000 ? 1000.0 : k);
    static constexpr std::array<double, 7> pi = {0.010417, 0.03125, 0.125, 0.5,
                                                 0.25,     0.0625,  0.020833};

    std::array<std::uint64_t, 7> counts{};
    std::vector<std::uint8_t> block(block_length);
    for (std::uint64_t b = 0; b < num_blocks; ++b) {
        for (auto& bit : block)
            bit = static_cast<std::uint8_t>(bits.next_bit());
        const double l = static_cast<double>(berlekamp_massey(block));
        const double t = sign * (l - mu) + 2.0 / 9.0;
        int bin;
        if (t <= -2.5) bin = 0;
        else if (t <= -1.5) bin = 1;
        else if (t <= -0.5) bin = 2;
        else if (t <= 0.5) bin = 3;
        else if (t <= 1.5) bin = 4;
        else if (t <= 2.5) bin = 5;
        else bin = 6;
        ++counts[static_cast<std::size_t>(bin)];
    }

    const double nb = static_cast<double>(num_blocks);
    double chi2 = 0.0;
    for (std::size_t i = 0; i < 7; ++i) {
        double diff = static_cast<double>(counts[i]) - nb * pi[i];
        chi2 += diff * diff / (nb * pi[i]);
    }

    TestResult r;
    r.test_name = "linear_complexity";
    r.n_consumed = num_blocks * block_length;
    r.statistic = chi2;
    r.p_value = chi_square_pvalue(chi2, 6);
    r.verdict = verdict_from_pvalue(r.p_value);
    return r;
}

TestResult birthday_spacings(WordSource& words, std::uint64_t n_draws, unsigned t_bits,
                             unsigned rounds) {
    if (t_bits == 0 || t_bits > words.word_bits())
        throw std::invalid_argument("t_bits must fit in the source word size");
    if (rounds == 0 || n_draws < 2)
        throw std::invalid_argument("birthday spacings needs draws and rounds");
    const double lambda = static_cast<double>(n_draws) * static_cast<double>(n_draws) *
                          static_cast<double>(n_draws) / std::pow(2.0, t_bits + 2.0);
    if (lambda < 1.0 || lambda > 16.0)
        throw std::invalid_argument("n^3 / 2^{t+2} must lie in [1, 16]");

    const unsigned drop = words.word_bits() - t_bits;
    std::uint64_t duplicates = 0;
    std::vector<std::uint64_t> draws(n_draws);
    for (unsigned round = 0; round < rounds; ++round) {
        for (auto& v : draws)
            v = words.next() >> drop;
        std::sort(draws.begin(), draws.end());
        std::vector<std::uint64_t> spacings(n_draws - 1);
        for (std::uint64_t i = 0; i + 1 < n_draws; ++i)
            spacings[i] = draws[i + 1] - draws[i];
        std::sort(spacings.begin(), spacings.end());
        for (std::uint64_t i = 1; i < spacings.size(); ++i)
            duplicates += spacings[i] == spacings[i - 1];
    }

    TestResult r;
    r.test_name = "birthday_spacings";
    r.n_consumed = static_cast<std::uint64_t>(rounds) * n_draws * words.word_bits();
    r.statistic = static_cast<double>(duplicates);
    r.p_value = poisson_upper_tail(duplicates, lambda * rounds);
    r.verdict = verdict_from_pvalue(r.p_value);
    return r;
}

} // namespace xg::stats
