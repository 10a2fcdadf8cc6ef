#pragma once

#include <array>
#include <cstdint>

#include "xg/xorgens.hpp"

namespace xg {

/// Marsaglia's XORWOW: five 32-bit xorshift words combined with an
/// additive counter (increment 362437).  Period 2^192 - 2^32.
class Xorwow {
public:
    /// SplitMix64 expansion of the seed; if the five xorshift words come
    /// out all zero the first is forced nonzero.
    explicit Xorwow(std::uint64_t seed);

    /// Explicit state, e.g. Marsaglia's published constants.  Throws
    /// std::invalid_argument if the five xorshift words are all zero.
    Xorwow(std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t u,
           std::uint32_t v, std::uint32_t d);

    std::uint32_t next() noexcept {
        std::uint32_t t = x_ ^ (x_ >> 2);
        x_ = y_;
        y_ = z_;
        z_ = u_;
        u_ = v_;
        v_ = (v_ ^ (v_ << 4)) ^ (t ^ (t << 1));
        d_ += 362437;
        return d_ + v_;
    }

    static constexpr std::size_t state_words() noexcept { return 6; }
    std::array<std::uint32_t, 6> state() const noexcept { return {x_, y_, z_, u_, v_, d_}; }

private:
    std::uint32_t x_, y_, z_, u_, v_, d_;
};

/// MT19937 (Matsumoto & Nishimura 1998), standard parameters and the
/// canonical multiplier-1812433253 seeding.
class Mt19937 {
public:
    explicit Mt19937(std::uint32_t seed = 5489);

    std::uint32_t next() noexcept;

    static constexpr std::size_t state_words() noexcept { return 625; } // buffer + index
    static constexpr unsigned n = 624;
    static constexpr unsigned m = 397;

private:
    std::array<std::uint32_t, n> mt_;
    unsigned idx_;
};

/// The Weyl-ablated xorgens: step_linear exposed as a stream.  Pure
/// GF(2)-linear; exists as the battery's negative control.
class RawXorgens {
public:
    RawXorgens(const GeneratorParams& params, std::uint64_t seed)
        : state_(params, seed) {}

    std::uint64_t next() noexcept { return state_.step_linear(); }
    const XorgensState& state() const noexcept { return state_; }
    unsigned word_bits() const noexcept { return state_.word_bits(); }

private:
    XorgensState state_;
};

} // namespace xg
