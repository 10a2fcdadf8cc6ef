#pragma once

#include <cstdint>

namespace xg {

// SplitMix64 finalizer chain (Steele, Lea & Flood / Stafford mix13).
// Full-avalanche expansion of a 64-bit seed; used by all seeding paths.
inline constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += UINT64_C(0x9e3779b97f4a7c15));
    z = (z ^ (z >> 30)) * UINT64_C(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94d049bb133111eb);
    return z ^ (z >> 31);
}

} // namespace xg
