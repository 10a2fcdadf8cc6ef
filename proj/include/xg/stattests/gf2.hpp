#pragma once

#include <cstdint>
#include <vector>

namespace xg::stats {

/// Rank over GF(2) of a bit matrix.  rows[i] packs the columns of row i,
/// column j at bit (j % 64) of word (j / 64).
unsigned gf2_rank(std::vector<std::vector<std::uint64_t>> rows, unsigned cols);

/// Single-word convenience overload for cols <= 64.
unsigned gf2_rank(const std::vector<std::uint64_t>& rows, unsigned cols);

/// Linear complexity: the length of the shortest LFSR generating `bits`
/// over GF(2) (0 for the all-zero sequence).  Bit-packed Berlekamp-Massey,
/// O(n^2 / 64).
std::size_t berlekamp_massey(const std::vector<std::uint8_t>& bits);

} // namespace xg::stats
