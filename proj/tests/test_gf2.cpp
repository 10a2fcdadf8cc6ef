#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "xg/mix.hpp"
#include "xg/stattests/gf2.hpp"

using namespace xg::stats;

namespace {

// Brute-force rank oracle: size of the row space, enumerated directly.
// Only viable for a handful of rows.
unsigned rank_by_row_space(const std::vector<std::uint64_t>& rows) {
    std::set<std::uint64_t> span{0};
    for (auto r : rows) {
        std::set<std::uint64_t> next = span;
        for (auto v : span)
            next.insert(v ^ r);
        span = std::move(next);
    }
    unsigned rank = 0;
    std::size_t size = span.size();
    while (size > 1) {
        size >>= 1;
        ++rank;
    }
    return rank;
}

// Exhaustive linear-complexity oracle: try every LFSR of length L = 0, 1, ...
// and every tap pattern until one reproduces the sequence.
std::size_t lfsr_search(const std::vector<std::uint8_t>& bits) {
    const std::size_t n = bits.size();
    bool all_zero = true;
    for (auto b : bits)
        all_zero &= b == 0;
    if (all_zero)
        return 0;
    for (std::size_t len = 1; len <= n; ++len) {
        if (len > 20)
            break; // keep the search tractable; callers stay below this
        for (std::uint64_t taps = 0; taps < (1ull << len); ++taps) {
            bool ok = true;
            for (std::size_t i = len; i < n && ok; ++i) {
                std::uint8_t pred = 0;
                for (std::size_t j = 0; j < len; ++j)
                    if ((taps >> j) & 1)
                        pred ^= bits[i - 1 - j];
                ok = pred == bits[i];
            }
            if (ok)
                return len;
        }
    }
    return n; // no LFSR shorter than the sequence reproduces it
}

} // namespace

TEST_CASE("gf2_rank known answers") {
    CHECK(gf2_rank(std::vector<std::uint64_t>{}, 8) == 0);
    CHECK(gf2_rank(std::vector<std::uint64_t>{0, 0, 0}, 8) == 0);
    // identity
    CHECK(gf2_rank(std::vector<std::uint64_t>{1, 2, 4, 8}, 4) == 4);
    // duplicate and dependent rows
    CHECK(gf2_rank(std::vector<std::uint64_t>{0b101, 0b101}, 3) == 1);
    CHECK(gf2_rank(std::vector<std::uint64_t>{0b110, 0b011, 0b101}, 3) == 2);
    // full-rank upper triangular
    CHECK(gf2_rank(std::vector<std::uint64_t>{0b111, 0b011, 0b001}, 3) == 3);
}

TEST_CASE("gf2_rank matches the row-space oracle on random 8x8 matrices") {
    std::uint64_t mix = 2024;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> rows(8);
        for (auto& r : rows)
            r = xg::splitmix64(mix) & 0xff;
        CHECK(gf2_rank(rows, 8) == rank_by_row_space(rows));
    }
}

TEST_CASE("gf2_rank is invariant under row operations") {
    std::uint64_t mix = 7;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint64_t> rows(10);
        for (auto& r : rows)
            r = xg::splitmix64(mix) & 0xffff;
        unsigned base = gf2_rank(rows, 16);

        auto swapped = rows;
        std::swap(swapped[1], swapped[7]);
        CHECK(gf2_rank(swapped, 16) == base);

        auto added = rows;
        added[3] ^= added[5];
        CHECK(gf2_rank(added, 16) == base);
    }
}

TEST_CASE("gf2_rank multiword agrees with the single-word overload") {
    std::uint64_t mix = 99;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint64_t> rows(32);
        std::vector<std::vector<std::uint64_t>> wide(32);
        for (unsigned i = 0; i < 32; ++i) {
            rows[i] = xg::splitmix64(mix) & 0xffffffffull;
            wide[i] = {rows[i]};
        }
        CHECK(gf2_rank(wide, 32) == gf2_rank(rows, 32));
    }
}

TEST_CASE("gf2_rank handles matrices wider than 64 columns") {
    // 100 columns: rows e_0, e_64, e_99, e_0 ^ e_64 -> rank 3.
    std::vector<std::vector<std::uint64_t>> rows = {
        {1, 0},
        {0, 1},
        {0, 1ull << 35},
        {1, 1},
    };
    CHECK(gf2_rank(rows, 100) == 3);

    // 128x128 identity.
    std::vector<std::vector<std::uint64_t>> ident(128, std::vector<std::uint64_t>(2, 0));
    for (unsigned i = 0; i < 128; ++i)
        ident[i][i / 64] = 1ull << (i % 64);
    CHECK(gf2_rank(ident, 128) == 128);
}

TEST_CASE("berlekamp_massey known answers") {
    CHECK(berlekamp_massey({}) == 0);
    CHECK(berlekamp_massey({0, 0, 0, 0}) == 0);
    // A single leading 1 followed by zeros needs an LFSR as long as the
    // position of that 1 plus one.
    CHECK(berlekamp_massey({1}) == 1);
    CHECK(berlekamp_massey({1, 0, 0, 0, 0, 0}) == 1);
    CHECK(berlekamp_massey({0, 0, 1, 0, 0, 0}) == 3);
    // Constant ones: x_{i} = x_{i-1}.
    CHECK(berlekamp_massey({1, 1, 1, 1, 1, 1, 1, 1}) == 1);
    // Alternating: x_i = x_{i-1} ^ 1 has no homogeneous length-1 LFSR, but
    // x_i = x_{i-2} works.
    CHECK(berlekamp_massey({1, 0, 1, 0, 1, 0, 1, 0}) == 2);
    // The classic NIST worked example: 1101011110001 has complexity 4.
    CHECK(berlekamp_massey({1, 1, 0, 1, 0, 1, 1, 1, 1, 0, 0, 0, 1}) == 4);
}

TEST_CASE("berlekamp_massey matches the exhaustive LFSR search") {
    std::uint64_t mix = 31337;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t len = 4 + (xg::splitmix64(mix) % 13); // 4..16
        std::vector<std::uint8_t> bits(len);
        for (auto& b : bits)
            b = static_cast<std::uint8_t>(xg::splitmix64(mix) & 1);
        CHECK(berlekamp_massey(bits) == lfsr_search(bits));
    }
}

TEST_CASE("berlekamp_massey on a known maximal-length LFSR stream") {
    // x^4 + x + 1 is primitive: the degree-4 LFSR s_i = s_{i-3} ^ s_{i-4}
    // produces a 15-periodic sequence with linear complexity exactly 4.
    std::vector<std::uint8_t> bits = {1, 0, 0, 0};
    while (bits.size() < 60)
        bits.push_back(bits[bits.size() - 3] ^ bits[bits.size() - 4]);
    CHECK(berlekamp_massey(bits) == 4);
}

TEST_CASE("berlekamp_massey handles long blocks") {
    // A degree-16 LFSR (primitive x^16 + x^5 + x^3 + x^2 + 1) embedded in a
    // 1000-bit block must come back as exactly 16.
    std::vector<std::uint8_t> bits(16, 0);
    bits[0] = 1;
    while (bits.size() < 1000) {
        std::size_t i = bits.size();
        bits.push_back(bits[i - 16] ^ bits[i - 14] ^ bits[i - 13] ^ bits[i - 11]);
    }
    CHECK(berlekamp_massey(bits) == 16);
}
