#include "xg/stattests/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace xg::stats {

unsigned gf2_rank(std::vector<std::vector<std::uint64_t>> rows, unsigned cols) {
    if (cols == 0)
        throw std::invalid_argument("matrix needs at least one column");
    const std::size_t words = (cols + 63) / 64;
    unsigned rank = 0;
    // (pivot column, index into rows) for each established pivot
    std::vector<std::pair<unsigned, std::size_t>> pivots;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& row = rows[i];
        if (row.size() != words)
            throw std::invalid_argument("row width mismatch");
        for (auto [col, pr] : pivots) {
            if ((row[col / 64] >> (col % 64)) & 1)
                for (std::size_t k = 0; k < words; ++k)
                    row[k] ^= rows[pr][k];
        }
        for (unsigned col = 0; col < cols; ++col) {
            if ((row[col / 64] >> (col % 64)) & 1) {
                pivots.emplace_back(col, i);
                ++rank;
                break;
            }
        }
    }
    return rank;
}

unsigned gf2_rank(const std::vector<std::uint64_t>& rows, unsigned cols) {
    if (cols > 64)
        throw std::invalid_argument("single-word overload handles cols <= 64");
    std::vector<std::vector<std::uint64_t>> wide;
    wide.reserve(rows.size());
    for (auto r : rows)
        wide.push_back({r});
    return gf2_rank(std::move(wide), cols);
}

namespace {

// dst ^= src << shift, over packed words.
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 std::size_t shift) {
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    for (std::size_t k = 0; k + word_shift < dst.size() && k < src.size(); ++k) {
        dst[k + word_shift] ^= src[k] << bit_shift;
        if (bit_shift != 0 && k + word_shift + 1 < dst.size())
            dst[k + word_shift + 1] ^= src[k] >> (64 - bit_shift);
    }
}

} // namespace

std::size_t berlekamp_massey(const std::vector<std::uint8_t>& bits) {
    const std::size_t n_bits = bits.size();
    if (n_bits == 0)
        return 0;
    const std::size_t words = n_bits / 64 + 2;

    // Reversed copy: rev[i] = bits[n_bits - 1 - i].  The discrepancy taps
    // s[n], s[n-1], ..., s[n-L] then form a contiguous slice of rev
    // starting at offset n_bits - 1 - n.
    std::vector<std::uint64_t> rev(words, 0);
    for (std::size_t i = 0; i < n_bits; ++i)
        if (bits[n_bits - 1 - i])
            rev[i / 64] |= UINT64_C(1) << (i % 64);

    std::vector<std::uint64_t> conn(words, 0), prev(words, 0);
    conn[0] = prev[0] = 1;
    std::size_t complexity = 0;
    std::size_t gap = 1; // steps since `prev` was the failing connection poly

    for (std::size_t n = 0; n < n_bits; ++n) {
        const std::size_t offset = n_bits - 1 - n;
        const std::size_t off_word = offset / 64;
        const unsigned off_bit = offset % 64;

        unsigned parity = 0;
        const std::size_t taps = complexity + 1; // coefficients 0..L
        for (std::size_t k = 0; k * 64 < taps; ++k) {
            std::uint64_t chunk = rev[off_word + k] >> off_bit;
            if (off_bit != 0 && off_word + k + 1 < words)
                chunk |= rev[off_word + k + 1] << (64 - off_bit);
            const std::size_t remaining = taps - k * 64;
            if (remaining < 64)
                chunk &= (UINT64_C(1) << remaining) - 1;
            parity ^= std::popcount(conn[k] & chunk) & 1u;
        }

        if (parity == 0) {
            ++gap;
        } else if (2 * complexity <= n) {
            std::vector<std::uint64_t> snapshot = conn;
            xor_shifted(conn, prev, gap);
            prev = std::move(snapshot);
            complexity = n + 1 - complexity;
            gap = 1;
        } else {
            xor_shifted(conn, prev, gap);
            ++gap;
        }
    }
    return complexity;
}

} // namespace xg::stats
