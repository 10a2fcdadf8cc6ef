#include "xg/xorgens.hpp"

#include <algorithm>

#include "xg/mix.hpp"

namespace xg {

XorgensState::XorgensState(const GeneratorParams& params,
                           std::vector<std::uint64_t> buffer, std::uint64_t weyl)
    : params_(validate_params(params)), mask_(params.mask()), x_(std::move(buffer)),
      weyl_(weyl & mask_) {
    if (x_.size() != params_.r)
        throw std::invalid_argument("buffer size must equal r");
    for (auto& word : x_)
        word &= mask_;
}

XorgensState::XorgensState(const GeneratorParams& params, std::uint64_t seed)
    : XorgensState(params, std::vector<std::uint64_t>(params.r, 0), 0) {
    std::uint64_t mix = seed;
    bool any_nonzero = false;
    for (auto& word : x_) {
        word = splitmix64(mix) & mask_;
        any_nonzero |= word != 0;
    }
    weyl_ = splitmix64(mix) & mask_;
    if (!any_nonzero)
        x_[0] = UINT64_C(0x9e3779b97f4a7c15) & mask_; // odd, nonzero for any w
    for (unsigned i = 0; i < 4 * params_.r; ++i)
        next_word();
}

XorgensState XorgensState::from_raw(const GeneratorParams& params,
                                    std::vector<std::uint64_t> buffer,
                                    std::uint64_t weyl) {
    return XorgensState(params, std::move(buffer), weyl);
}

std::vector<std::uint64_t> XorgensState::logical_buffer() const {
    // x_[idx_] is the oldest live value (the slot the next step overwrites).
    std::vector<std::uint64_t> out(params_.r);
    for (unsigned i = 0; i < params_.r; ++i)
        out[i] = x_[(idx_ + i) % params_.r];
    return out;
}

bool operator==(const XorgensState& lhs, const XorgensState& rhs) {
    return lhs.x_ == rhs.x_ && lhs.idx_ == rhs.idx_ && lhs.weyl_ == rhs.weyl_;
}

} // namespace xg
