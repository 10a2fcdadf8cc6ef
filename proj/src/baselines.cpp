#include "xg/baselines.hpp"

#include <stdexcept>

#include "xg/mix.hpp"

namespace xg {

Xorwow::Xorwow(std::uint64_t seed) {
    std::uint64_t mix = seed;
    std::uint64_t ab = splitmix64(mix);
    std::uint64_t cd = splitmix64(mix);
    std::uint64_t ef = splitmix64(mix);
    x_ = static_cast<std::uint32_t>(ab);
    y_ = static_cast<std::uint32_t>(ab >> 32);
    z_ = static_cast<std::uint32_t>(cd);
    u_ = static_cast<std::uint32_t>(cd >> 32);
    v_ = static_cast<std::uint32_t>(ef);
    d_ = static_cast<std::uint32_t>(ef >> 32);
    if ((x_ | y_ | z_ | u_ | v_) == 0)
        x_ = UINT32_C(0x9e3779b9);
}

Xorwow::Xorwow(std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t u,
               std::uint32_t v, std::uint32_t d)
    : x_(x), y_(y), z_(z), u_(u), v_(v), d_(d) {
    if ((x_ | y_ | z_ | u_ | v_) == 0)
        throw std::invalid_argument("xorwow xorshift words must not be all zero");
}

Mt19937::Mt19937(std::uint32_t seed) {
    mt_[0] = seed;
    for (unsigned i = 1; i < n; ++i)
        mt_[i] = UINT32_C(1812433253) * (mt_[i - 1] ^ (mt_[i - 1] >> 30)) + i;
    idx_ = n;
}

std::uint32_t Mt19937::next() noexcept {
    if (idx_ >= n) {
        for (unsigned i = 0; i < n; ++i) {
            std::uint32_t y = (mt_[i] & UINT32_C(0x80000000)) |
                              (mt_[(i + 1) % n] & UINT32_C(0x7fffffff));
            mt_[i] = mt_[(i + m) % n] ^ (y >> 1);
            if (y & 1)
                mt_[i] ^= UINT32_C(0x9908b0df);
        }
        idx_ = 0;
    }
    std::uint32_t y = mt_[idx_++];
    y ^= y >> 11;
    y ^= (y << 7) & UINT32_C(0x9d2c5680);
    y ^= (y << 15) & UINT32_C(0xefc60000);
    y ^= y >> 18;
    return y;
}

} // namespace xg
