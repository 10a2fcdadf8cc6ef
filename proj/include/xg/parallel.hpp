#pragma once

#include <cstdint>
#include <vector>

#include "xg/xorgens.hpp"

namespace xg {

/// Produces the next `lanes` outputs of the stream in one batch,
/// bit-identical to calling next_word() `lanes` times.
///
/// All lane recurrence terms are computed from a snapshot of the buffer
/// (every read is of a value older than the batch), so the lanes are
/// independently evaluable; the Weyl stage for lane l uses weyl + (l+1)*omega,
/// preserving sequence order.  Throws std::out_of_range unless
/// 1 <= lanes <= lane_bound(params).
std::vector<std::uint64_t> batch_step(XorgensState& state, unsigned lanes);

/// Simulates an unsynchronised in-place schedule: lanes are evaluated in
/// reverse order, each reading the live buffer and writing immediately.
/// For lanes <= lane_bound this equals the serial stream (no lane touches
/// another lane's slot); for lanes = lane_bound + 1 a term that must be
/// read before it is overwritten (or that depends on an in-batch result)
/// goes wrong, which is exactly the hazard that caps intra-state
/// parallelism at min(s, r - s).  Analysis/negative-test hook; no lane
/// count check beyond lanes <= r.
std::vector<std::uint64_t> unsynchronized_batch(XorgensState& state, unsigned lanes);

/// min(s, r - s) for xorgens vs. the N - M bound of an MT-style recurrence:
/// returns N - M.  Throws std::out_of_range if M >= N or M == 0.
unsigned mt_parallel_bound(unsigned n, unsigned m);

/// p independent block streams with consecutive seeds base_seed + i.
class BlockEnsemble {
public:
    /// Throws std::out_of_range for num_blocks == 0 or lanes outside
    /// [1, lane_bound(params)].
    BlockEnsemble(const GeneratorParams& params, std::uint64_t base_seed,
                  unsigned num_blocks, unsigned lanes);

    /// Generates per_block words from every block, fanning blocks out
    /// across up to `workers` threads.  Output is block-major and a pure
    /// function of (params, base_seed, num_blocks, per_block) -- never of
    /// the worker count.
    std::vector<std::vector<std::uint64_t>> generate(std::size_t per_block,
                                                     unsigned workers = 0);

    unsigned num_blocks() const noexcept { return static_cast<unsigned>(blocks_.size()); }
    unsigned lanes() const noexcept { return lanes_; }
    std::uint64_t base_seed() const noexcept { return base_seed_; }
    XorgensState& block(unsigned i) { return blocks_.at(i); }
    const XorgensState& block(unsigned i) const { return blocks_.at(i); }

private:
    std::vector<XorgensState> blocks_;
    std::uint64_t base_seed_;
    unsigned lanes_;
};

} // namespace xg
