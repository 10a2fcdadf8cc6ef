#include "xg/params.hpp"

#include <numeric>

namespace xg {

const char* to_string(ParamError e) noexcept {
    switch (e) {
    case ParamError::bad_word_size: return "word size must be 8, 16, 32 or 64";
    case ParamError::s_out_of_range: return "tap offset s must satisfy 0 < s < r";
    case ParamError::gcd_not_one: return "r and s must be coprime";
    case ParamError::shift_out_of_range: return "shifts a, b, c, d must lie in (0, w)";
    case ParamError::gamma_out_of_range: return "output shift gamma must lie in (0, w)";
    case ParamError::even_weyl_increment: return "Weyl increment omega must be odd";
    }
    return "unknown parameter error";
}

ParamValidationError::ParamValidationError(ParamError code)
    : std::invalid_argument(to_string(code)), code_(code) {}

std::optional<ParamError> check_params(const GeneratorParams& p) noexcept {
    if (p.w != 8 && p.w != 16 && p.w != 32 && p.w != 64)
        return ParamError::bad_word_size;
    if (p.s == 0 || p.s >= p.r)
        return ParamError::s_out_of_range;
    if (std::gcd(p.r, p.s) != 1)
        return ParamError::gcd_not_one;
    for (unsigned shift : {p.a, p.b, p.c, p.d})
        if (shift == 0 || shift >= p.w)
            return ParamError::shift_out_of_range;
    if (p.gamma == 0 || p.gamma >= p.w)
        return ParamError::gamma_out_of_range;
    if ((p.omega & 1) == 0)
        return ParamError::even_weyl_increment;
    return std::nullopt;
}

GeneratorParams validate_params(const GeneratorParams& p) {
    if (auto err = check_params(p))
        throw ParamValidationError(*err);
    return p;
}

PeriodDescription period_description(const GeneratorParams& p) {
    PeriodDescription d;
    d.linear_exponent = p.r * p.w;
    d.weyl_factor_exponent = p.w;
    d.display = "~2^" + std::to_string(d.linear_exponent + d.weyl_factor_exponent);
    return d;
}

std::uint64_t recommended_weyl_increment(unsigned w) {
    // Odd integer nearest 2^{w-1}(sqrt(5) - 1).
    switch (w) {
    case 8: return 159;
    case 16: return 40503;
    case 32: return UINT64_C(2654435769);
    case 64: return UINT64_C(11400714819323198485);
    default: throw ParamValidationError(ParamError::bad_word_size);
    }
}

namespace {

GeneratorParams make(unsigned r, unsigned s, unsigned a, unsigned b, unsigned c,
                     unsigned d, unsigned w) {
    GeneratorParams p;
    p.r = r;
    p.s = s;
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = d;
    p.w = w;
    p.omega = recommended_weyl_increment(w);
    p.gamma = default_output_shift(w);
    return validate_params(p);
}

} // namespace

GeneratorParams xorgensgp32_params() { return make(128, 65, 15, 14, 12, 17, 32); }
GeneratorParams tiny_r2w8_params() { return make(2, 1, 1, 1, 5, 7, 8); }
GeneratorParams tiny_r2w16_params() { return make(2, 1, 1, 1, 6, 11, 16); }
GeneratorParams tiny_r4w16_params() { return make(4, 3, 1, 2, 5, 8, 16); }

} // namespace xg
