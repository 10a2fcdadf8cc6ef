#include "xg/parallel.hpp"

#include <stdexcept>
#include <thread>

namespace xg {

std::vector<std::uint64_t> batch_step(XorgensState& state, unsigned lanes) {
    const GeneratorParams& p = state.params();
    if (lanes == 0 || lanes > lane_bound(p))
        throw std::out_of_range("lane count exceeds min(s, r - s)");

    const std::uint64_t mask = state.word_mask();
    auto& x = state.raw_buffer();
    const unsigned idx = state.index();
    const unsigned r = p.r;
    const unsigned back_s = r - p.s;

    // Gather phase: every read hits a pre-batch buffer entry.
    std::vector<std::uint64_t> fresh(lanes);
    for (unsigned l = 0; l < lanes; ++l) {
        unsigned pos_r = idx + l;
        if (pos_r >= r) pos_r -= r;
        unsigned pos_s = idx + l + back_s;
        while (pos_s >= r) pos_s -= r;
        fresh[l] = xorshift_transform(x[pos_r], p.a, p.b, mask) ^
                   xorshift_transform(x[pos_s], p.c, p.d, mask);
    }

    // Commit phase plus the Weyl stage in sequence order.
    std::uint64_t weyl = state.weyl_value();
    std::vector<std::uint64_t> out(lanes);
    for (unsigned l = 0; l < lanes; ++l) {
        unsigned pos = idx + l;
        if (pos >= r) pos -= r;
        x[pos] = fresh[l];
        weyl = (weyl + p.omega) & mask;
        out[l] = ((weyl ^ (weyl >> p.gamma)) + fresh[l]) & mask;
    }
    state.advance_raw(lanes, weyl);
    return out;
}

std::vector<std::uint64_t> unsynchronized_batch(XorgensState& state, unsigned lanes) {
    const GeneratorParams& p = state.params();
    if (lanes == 0 || lanes > p.r)
        throw std::out_of_range("lane count exceeds buffer size");

    const std::uint64_t mask = state.word_mask();
    auto& x = state.raw_buffer();
    const unsigned idx = state.index();
    const unsigned r = p.r;
    const unsigned back_s = r - p.s;

    // Worst-case schedule: highest lane runs first, writing into the live
    // buffer before lower lanes read.
    std::vector<std::uint64_t> fresh(lanes);
    for (unsigned l = lanes; l-- > 0;) {
        unsigned pos_r = idx + l;
        if (pos_r >= r) pos_r -= r;
        unsigned pos_s = idx + l + back_s;
        while (pos_s >= r) pos_s -= r;
        fresh[l] = xorshift_transform(x[pos_r], p.a, p.b, mask) ^
                   xorshift_transform(x[pos_s], p.c, p.d, mask);
        x[pos_r] = fresh[l];
    }

    std::uint64_t weyl = state.weyl_value();
    std::vector<std::uint64_t> out(lanes);
    for (unsigned l = 0; l < lanes; ++l) {
        weyl = (weyl + p.omega) & mask;
        out[l] = ((weyl ^ (weyl >> p.gamma)) + fresh[l]) & mask;
    }
    state.advance_raw(lanes, weyl);
    return out;
}

unsigned mt_parallel_bound(unsigned n, unsigned m) {
    if (m == 0 || m >= n)
        throw std::out_of_range("require 0 < M < N");
    return n - m;
}

BlockEnsemble::BlockEnsemble(const GeneratorParams& params, std::uint64_t base_seed,
                             unsigned num_blocks, unsigned lanes)
    : base_seed_(base_seed), lanes_(lanes) {
    validate_params(params);
    if (num_blocks == 0)
        throw std::out_of_range("ensemble needs at least one block");
    if (lanes == 0 || lanes > lane_bound(params))
        throw std::out_of_range("lane count exceeds min(s, r - s)");
    blocks_.reserve(num_blocks);
    for (unsigned i = 0; i < num_blocks; ++i)
        blocks_.emplace_back(params, base_seed + i);
}

std::vector<std::vector<std::uint64_t>> BlockEnsemble::generate(std::size_t per_block,
                                                                unsigned workers) {
    const unsigned p = num_blocks();
    std::vector<std::vector<std::uint64_t>> result(p);

    auto run_block = [&](unsigned i) {
        XorgensState& st = blocks_[i];
        std::vector<std::uint64_t>& out = result[i];
        out.reserve(per_block);
        std::size_t remaining = per_block;
        while (remaining > 0) {
            unsigned take = lanes_ <= remaining ? lanes_ : static_cast<unsigned>(remaining);
            auto chunk = batch_step(st, take);
            out.insert(out.end(), chunk.begin(), chunk.end());
            remaining -= take;
        }
    };

    if (workers == 0)
        workers = std::thread::hardware_concurrency();
    if (workers <= 1 || p == 1) {
        for (unsigned i = 0; i < p; ++i)
            run_block(i);
        return result;
    }

    std::vector<std::thread> pool;
    unsigned used = workers < p ? workers : p;
    pool.reserve(used);
    for (unsigned t = 0; t < used; ++t) {
        pool.emplace_back([&, t] {
            for (unsigned i = t; i < p; i += used)
                run_block(i);
        });
    }
    for (auto& th : pool)
        th.join();
    return result;
}

} // namespace xg
