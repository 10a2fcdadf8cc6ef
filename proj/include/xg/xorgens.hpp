#pragma once

#include <cstdint>
#include <vector>

#include "xg/params.hpp"

namespace xg {

/// One xorshift stage: (x ^ (x << left)) then ^ (>> right), on w-bit words.
/// The left-shift factor applies first (row-vector convention); shifted-out
/// bits are discarded by the word mask.
constexpr std::uint64_t xorshift_transform(std::uint64_t x, unsigned left_shift,
                                           unsigned right_shift,
                                           std::uint64_t mask) noexcept {
    std::uint64_t t = (x ^ (x << left_shift)) & mask;
    return t ^ (t >> right_shift);
}

/// One serial xorgens stream: circular buffer of r words, a circular index
/// and a Weyl accumulator.  Single-owner mutable; transferable between
/// threads but never shared.
class XorgensState {
public:
    /// Deterministic seeding: expands `seed` through a SplitMix64 chain to
    /// fill the buffer and the Weyl accumulator, forces the buffer away
    /// from all-zero, then discards 4*r outputs as warm-up.
    XorgensState(const GeneratorParams& params, std::uint64_t seed);

    /// Builds a state with explicit buffer/weyl contents and no warm-up.
    /// `buffer` holds the most recent r values, oldest first; it is not
    /// checked against all-zero.  Test and analysis hook.
    static XorgensState from_raw(const GeneratorParams& params,
                                 std::vector<std::uint64_t> buffer,
                                 std::uint64_t weyl);

    /// Advances the linear recurrence only (Weyl accumulator untouched)
    /// and returns the new sequence element x_i.
    std::uint64_t step_linear() noexcept {
        std::uint64_t t = xorshift_transform(x_[idx_], params_.a, params_.b, mask_);
        unsigned tap = idx_ + (params_.r - params_.s);
        if (tap >= params_.r) tap -= params_.r;
        std::uint64_t v = t ^ xorshift_transform(x_[tap], params_.c, params_.d, mask_);
        x_[idx_] = v;
        if (++idx_ == params_.r) idx_ = 0;
        return v;
    }

    /// weyl <- weyl + omega mod 2^w; returns the new accumulator value.
    std::uint64_t weyl_next() noexcept {
        weyl_ = (weyl_ + params_.omega) & mask_;
        return weyl_;
    }

    /// Full output stage: advances both parts and returns
    /// ((weyl ^ (weyl >> gamma)) + x_i) mod 2^w.  The addition is integer
    /// addition, not XOR; it is what breaks GF(2) linearity.
    std::uint64_t next_word() noexcept {
        std::uint64_t v = step_linear();
        std::uint64_t wk = weyl_next();
        return ((wk ^ (wk >> params_.gamma)) + v) & mask_;
    }

    const GeneratorParams& params() const noexcept { return params_; }
    unsigned word_bits() const noexcept { return params_.w; }
    std::uint64_t word_mask() const noexcept { return mask_; }

    /// Buffer words plus the Weyl accumulator (r + 1); the circular index
    /// is not counted as a state word.
    std::size_t state_words() const noexcept { return params_.r + 1; }

    /// The last r sequence values in logical order, oldest first
    /// (independent of where the circular index happens to point).
    std::vector<std::uint64_t> logical_buffer() const;

    std::uint64_t weyl_value() const noexcept { return weyl_; }
    unsigned index() const noexcept { return idx_; }
    const std::vector<std::uint64_t>& raw_buffer() const noexcept { return x_; }

    friend bool operator==(const XorgensState&, const XorgensState&);

    // Internals needed by the lane-batching code in parallel.cpp.
    std::vector<std::uint64_t>& raw_buffer() noexcept { return x_; }
    void advance_raw(unsigned steps, std::uint64_t weyl) noexcept {
        idx_ = (idx_ + steps) % params_.r;
        weyl_ = weyl;
    }

private:
    XorgensState(const GeneratorParams& params, std::vector<std::uint64_t> buffer,
                 std::uint64_t weyl);

    GeneratorParams params_;
    std::uint64_t mask_;
    std::vector<std::uint64_t> x_;
    unsigned idx_ = 0;
    std::uint64_t weyl_ = 0;
};

bool operator==(const XorgensState& lhs, const XorgensState& rhs);

/// Free-function spelling of the seeding constructor.
inline XorgensState seed_state(const GeneratorParams& params, std::uint64_t seed) {
    return XorgensState(params, seed);
}

} // namespace xg
