#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace xg {

/// Everything that defines one member of the xorgens family.
///
/// The linear recurrence is
///     x_i = T(x_{i-r}, a, b) ^ T(x_{i-s}, c, d)
/// where T(x, l, rr) = (x ^ (x << l)) ^ ((x ^ (x << l)) >> rr) on w-bit
/// words, and the output stage combines x_i with a Weyl sequence
/// (increment `omega`, output right-shift `gamma`).
struct GeneratorParams {
    unsigned r = 0;          // degree of recurrence (buffer words)
    unsigned s = 0;          // second tap offset, 0 < s < r, gcd(r, s) = 1
    unsigned a = 0, b = 0;   // shifts applied to x_{i-r}
    unsigned c = 0, d = 0;   // shifts applied to x_{i-s}
    unsigned w = 32;         // word size in bits: 8, 16, 32 or 64
    std::uint64_t omega = 0; // odd Weyl increment
    unsigned gamma = 0;      // output right-shift, 0 < gamma < w

    constexpr std::uint64_t mask() const noexcept {
        return w >= 64 ? ~UINT64_C(0) : ((UINT64_C(1) << w) - 1);
    }
};

enum class ParamError {
    bad_word_size,       // w not in {8, 16, 32, 64}
    s_out_of_range,      // violates 0 < s < r
    gcd_not_one,         // gcd(r, s) != 1
    shift_out_of_range,  // one of a, b, c, d outside (0, w)
    gamma_out_of_range,  // gamma outside (0, w)
    even_weyl_increment, // omega must be odd
};

const char* to_string(ParamError e) noexcept;

class ParamValidationError : public std::invalid_argument {
public:
    explicit ParamValidationError(ParamError code);
    ParamError code() const noexcept { return code_; }

private:
    ParamError code_;
};

/// Checks all GeneratorParams invariants; nullopt means valid.
std::optional<ParamError> check_params(const GeneratorParams& p) noexcept;

/// Returns `p` unchanged if valid, otherwise throws ParamValidationError.
GeneratorParams validate_params(const GeneratorParams& p);

/// min(s, r - s): the number of recurrence terms computable concurrently
/// from one state without a read/write hazard.
constexpr unsigned lane_bound(const GeneratorParams& p) noexcept {
    return p.s < p.r - p.s ? p.s : p.r - p.s;
}

/// Nominal period (2^{rw} - 1) * 2^w, reported as exponent components.
/// No primitivity claim is made for the linear part.
struct PeriodDescription {
    unsigned linear_exponent;      // r * w
    unsigned weyl_factor_exponent; // w
    std::string display;           // "~2^{rw+w}"
};

PeriodDescription period_description(const GeneratorParams& p);

/// The odd integer nearest 2^{w-1}(sqrt(5) - 1).
std::uint64_t recommended_weyl_increment(unsigned w);

/// gamma = w / 2.
constexpr unsigned default_output_shift(unsigned w) noexcept { return w / 2; }

// ---- shipped parameter sets -------------------------------------------

/// (r,s,a,b,c,d) = (128,65,15,14,12,17), w = 32.  The production set;
/// its full period is not re-verified here (nominal 2^4128).
GeneratorParams xorgensgp32_params();

/// Tiny sets for exhaustive verification.  Shift quadruples were found by
/// a matrix-order period search; the linear part of each achieves the full
/// period 2^{rw} - 1 (re-verified by exhaustive iteration in the test
/// suite where 2^{rw} is small enough).
GeneratorParams tiny_r2w8_params();  // (2,1,1,1,5,7),  w=8,  linear period 2^16-1
GeneratorParams tiny_r2w16_params(); // (2,1,1,1,6,11), w=16, linear period 2^32-1
GeneratorParams tiny_r4w16_params(); // (4,3,1,2,5,8),  w=16, linear period 2^64-1

} // namespace xg
