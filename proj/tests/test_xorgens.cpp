#include <doctest.h>

#include <array>
#include <cstdint>
#include <vector>

#include "xg/mix.hpp"
#include "xg/stattests/gf2.hpp"
#include "xg/xorgens.hpp"

using namespace xg;

namespace {

// Independent scalar oracle: the xorshift stage evaluated bit by bit on a
// bool array, no word-level shifts.
std::uint64_t oracle_xorshift(std::uint64_t x, unsigned a, unsigned b, unsigned w) {
    std::vector<int> bits(w), t(w), out(w);
    for (unsigned i = 0; i < w; ++i)
        bits[i] = (x >> i) & 1;
    for (unsigned i = 0; i < w; ++i)
        t[i] = bits[i] ^ (i >= a ? bits[i - a] : 0); // x ^ (x << a)
    for (unsigned i = 0; i < w; ++i)
        out[i] = t[i] ^ (i + b < w ? t[i + b] : 0); // t ^ (t >> b)
    std::uint64_t r = 0;
    for (unsigned i = 0; i < w; ++i)
        r |= static_cast<std::uint64_t>(out[i]) << i;
    return r;
}

// Straight-line history oracle for the linear recurrence: keeps every
// sequence element, no circular buffer.
struct HistoryOracle {
    GeneratorParams p;
    std::vector<std::uint64_t> h; // h[0..r) = initial buffer, oldest first

    explicit HistoryOracle(const GeneratorParams& params,
                           std::vector<std::uint64_t> init)
        : p(params), h(std::move(init)) {}

    std::uint64_t next_linear() {
        std::size_t i = h.size();
        std::uint64_t v = oracle_xorshift(h[i - p.r], p.a, p.b, p.w) ^
                          oracle_xorshift(h[i - p.s], p.c, p.d, p.w);
        h.push_back(v);
        return v;
    }
};

} // namespace

TEST_CASE("xorshift transform known answers") {
    CHECK(xorshift_transform(0, 3, 5, 0xff) == 0);
    // w=8, x=0x01, a=1, b=1: t = 0x01 ^ 0x02 = 0x03; out = 0x03 ^ 0x01 = 0x02
    CHECK(xorshift_transform(0x01, 1, 1, 0xff) == 0x02);
    CHECK(oracle_xorshift(0x01, 1, 1, 8) == 0x02);
    // w=32 production shifts, checked against the bitwise oracle
    CHECK(xorshift_transform(0xFFFFFFFFull, 15, 14, 0xFFFFFFFFull) ==
          oracle_xorshift(0xFFFFFFFFull, 15, 14, 32));
}

TEST_CASE("xorshift transform matches the bitwise oracle broadly") {
    std::uint64_t mix = 7;
    for (unsigned w : {8u, 16u, 32u, 64u}) {
        std::uint64_t mask = w >= 64 ? ~0ull : (1ull << w) - 1;
        for (int i = 0; i < 50; ++i) {
            std::uint64_t x = splitmix64(mix) & mask;
            unsigned a = 1 + static_cast<unsigned>(splitmix64(mix) % (w - 1));
            unsigned b = 1 + static_cast<unsigned>(splitmix64(mix) % (w - 1));
            CHECK(xorshift_transform(x, a, b, mask) == oracle_xorshift(x, a, b, w));
        }
    }
}

TEST_CASE("step_linear absorbs the all-zero buffer") {
    auto p = tiny_r2w8_params();
    auto st = XorgensState::from_raw(p, {0, 0}, 0);
    for (int i = 0; i < 100; ++i)
        CHECK(st.step_linear() == 0);
    CHECK(st.logical_buffer() == std::vector<std::uint64_t>{0, 0});
}

TEST_CASE("tiny r2w8 linear part has full period 2^16 - 1") {
    auto p = tiny_r2w8_params();
    auto st = XorgensState::from_raw(p, {1, 0}, 0);
    const auto initial = st.logical_buffer();
    std::uint64_t period = 0;
    do {
        st.step_linear();
        ++period;
    } while (st.logical_buffer() != initial);
    CHECK(period == 65535);
}

TEST_CASE("step_linear matches the straight-line history oracle") {
    auto p = xorgensgp32_params();
    std::vector<std::uint64_t> init(p.r);
    std::uint64_t mix = 42;
    for (auto& v : init)
        v = splitmix64(mix) & p.mask();
    auto st = XorgensState::from_raw(p, init, 0);
    HistoryOracle oracle(p, init);
    for (int i = 0; i < 300; ++i)
        CHECK(st.step_linear() == oracle.next_linear());
}

TEST_CASE("weyl accumulator wraps and cycles") {
    auto p = tiny_r2w8_params();
    p.omega = 1;
    auto st = XorgensState::from_raw(p, {1, 0}, 255);
    CHECK(st.weyl_next() == 0);

    SUBCASE("odd increment visits all 2^w values") {
        for (std::uint64_t omega : {1ull, 159ull, 255ull}) {
            auto q = tiny_r2w8_params();
            q.omega = omega;
            auto s2 = XorgensState::from_raw(q, {1, 0}, 37);
            std::vector<bool> seen(256, false);
            for (int i = 0; i < 256; ++i) {
                auto v = s2.weyl_next();
                CHECK(!seen[v]);
                seen[v] = true;
            }
            CHECK(s2.weyl_value() == 37); // back to the start
        }
    }
}

TEST_CASE("weyl sequence for the recommended 32-bit increment") {
    auto p = xorgensgp32_params();
    REQUIRE(p.omega == 2654435769u);
    std::vector<std::uint64_t> init(p.r, 1);
    auto st = XorgensState::from_raw(p, init, 0);
    CHECK(st.weyl_next() == 2654435769u);
    CHECK(st.weyl_next() == 1013904242u);
    CHECK(st.weyl_next() == 3668340011u);
}

TEST_CASE("next_word with forced components") {
    // All-zero buffer keeps x_k = 0; omega = 1, gamma = 4, weyl starts at 0:
    // output = (1 ^ (1 >> 4)) + 0 = 1.
    auto p = tiny_r2w8_params();
    p.omega = 1;
    p.gamma = 4;
    auto st = XorgensState::from_raw(p, {0, 0}, 0);
    CHECK(st.next_word() == 1);
}

TEST_CASE("next_word equals the history oracle plus Weyl stage") {
    auto p = xorgensgp32_params();
    XorgensState st(p, 0);
    // Re-run the output stage on top of the independent linear oracle.
    HistoryOracle oracle(p, st.logical_buffer());
    std::uint64_t weyl = st.weyl_value();
    for (int i = 0; i < 64; ++i) {
        std::uint64_t x = oracle.next_linear();
        weyl = (weyl + p.omega) & p.mask();
        std::uint64_t expected = ((weyl ^ (weyl >> p.gamma)) + x) & p.mask();
        CHECK(st.next_word() == expected);
    }
}

TEST_CASE("known-answer vector: xorgensgp32 seed 0, first 16 outputs") {
    XorgensState st(xorgensgp32_params(), 0);
    const std::array<std::uint64_t, 16> expected = {
        0xa2c5f91b, 0xbd5797de, 0xcac8bc67, 0x7ba44aee,
        0x11254d96, 0x198b2ab0, 0x656ea882, 0x9a94ce3e,
        0x45568ed8, 0x1a4d6e4b, 0xbdcd2db4, 0x4bb14332,
        0x74e6e085, 0x4cafd1e2, 0x04dbdceb, 0x07ba0f22,
    };
    for (auto e : expected)
        CHECK(st.next_word() == e);
}

TEST_CASE("Weyl ablation: next_word and step_linear streams differ") {
    auto p = tiny_r2w16_params();
    XorgensState a(p, 9);
    XorgensState b = a;
    bool diverged = false;
    for (int i = 0; i < 1'000'000 && !diverged; ++i)
        diverged = a.next_word() != b.step_linear();
    CHECK(diverged);
}

TEST_CASE("determinism across call batching") {
    auto p = xorgensgp32_params();
    XorgensState a(p, 1234);
    XorgensState b(p, 1234);
    std::vector<std::uint64_t> one_by_one, chunked;
    for (int i = 0; i < 1000; ++i)
        one_by_one.push_back(a.next_word());
    for (int chunk = 0; chunk < 10; ++chunk)
        for (int i = 0; i < 100; ++i)
            chunked.push_back(b.next_word());
    CHECK(one_by_one == chunked);
}

TEST_CASE("step_linear is GF(2)-linear; next_word is not") {
    auto p = tiny_r2w8_params();
    const unsigned n = p.r * p.w; // 16 state bits

    auto pack = [&](std::uint64_t bits) {
        // bit i of `bits` -> bit (i % w) of logical word (i / w), oldest first
        std::vector<std::uint64_t> buf(p.r, 0);
        for (unsigned i = 0; i < n; ++i)
            if ((bits >> i) & 1)
                buf[i / p.w] |= 1ull << (i % p.w);
        return buf;
    };
    auto unpack = [&](const std::vector<std::uint64_t>& buf) {
        std::uint64_t bits = 0;
        for (unsigned i = 0; i < n; ++i)
            bits |= ((buf[i / p.w] >> (i % p.w)) & 1) << i;
        return bits;
    };
    auto step = [&](std::uint64_t state_bits) {
        auto st = XorgensState::from_raw(p, pack(state_bits), 0);
        st.step_linear();
        return unpack(st.logical_buffer());
    };

    // Probe unit vectors to build the transition matrix.
    std::vector<std::uint64_t> columns(n);
    for (unsigned i = 0; i < n; ++i)
        columns[i] = step(1ull << i);
    auto apply = [&](std::uint64_t v) {
        std::uint64_t out = 0;
        for (unsigned i = 0; i < n; ++i)
            if ((v >> i) & 1)
                out ^= columns[i];
        return out;
    };

    std::uint64_t mix = 5;
    for (int i = 0; i < 200; ++i) {
        std::uint64_t v = splitmix64(mix) & 0xffff;
        CHECK(step(v) == apply(v));
    }

    SUBCASE("next_word violates additivity") {
        auto out = [&](std::uint64_t state_bits) {
            auto st = XorgensState::from_raw(p, pack(state_bits), 0);
            return st.next_word();
        };
        bool linear_everywhere = true;
        for (int i = 0; i < 50 && linear_everywhere; ++i) {
            std::uint64_t u = splitmix64(mix) & 0xffff;
            std::uint64_t v = splitmix64(mix) & 0xffff;
            linear_everywhere = out(u ^ v) == (out(u) ^ out(v) ^ out(0));
        }
        CHECK(!linear_everywhere);
    }
}

TEST_CASE("low bit: linear without the Weyl stage, not linear with it") {
    auto p = tiny_r2w8_params();
    const unsigned n = p.r * p.w;

    XorgensState raw(p, 77);
    std::vector<std::uint8_t> raw_bits;
    for (unsigned i = 0; i < 16 * n; ++i)
        raw_bits.push_back(static_cast<std::uint8_t>(raw.step_linear() & 1));
    CHECK(xg::stats::berlekamp_massey(raw_bits) <= n);

    XorgensState mixed(p, 77);
    std::vector<std::uint8_t> mixed_bits;
    for (unsigned i = 0; i < 4 * n; ++i)
        mixed_bits.push_back(static_cast<std::uint8_t>(mixed.next_word() & 1));
    CHECK(xg::stats::berlekamp_massey(mixed_bits) > n);
}

TEST_CASE("state footprint is r + 1 words plus one index") {
    XorgensState big(xorgensgp32_params(), 0);
    CHECK(big.state_words() == 129);
    XorgensState tiny(tiny_r2w8_params(), 0);
    CHECK(tiny.state_words() == 3);
}
