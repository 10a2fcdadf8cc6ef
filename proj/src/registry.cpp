#include "xg/registry.hpp"

#include <stdexcept>

namespace xg {

namespace {

GeneratorInfo xorgens_info(std::string id, const GeneratorParams& p, bool weyl,
                           std::string note) {
    GeneratorInfo info;
    info.id = std::move(id);
    info.params = p;
    info.weyl_combined = weyl;
    info.state_words = p.r + 1;
    auto period = period_description(p);
    if (weyl)
        info.period_display = period.display;
    else
        info.period_display = "2^" + std::to_string(period.linear_exponent) + "-1";
    info.period_note = std::move(note);
    return info;
}

std::vector<GeneratorInfo> build_registry() {
    std::vector<GeneratorInfo> reg;
    reg.push_back(xorgens_info("xorgensgp32", xorgensgp32_params(), true,
                               "nominal; primitivity not re-verified"));
    reg.push_back(xorgens_info("xorgens-raw", xorgensgp32_params(), false,
                               "linear part only (Weyl ablated); nominal"));
    reg.push_back(xorgens_info("tiny:r2w8", tiny_r2w8_params(), true,
                               "exact: (2^16-1)*2^8 = 16776960, verified by exhaustive iteration"));
    reg.push_back(xorgens_info("tiny:r2w16", tiny_r2w16_params(), true,
                               "linear period 2^32-1 verified by matrix-order search"));
    reg.push_back(xorgens_info("tiny:r4w16", tiny_r4w16_params(), true,
                               "linear period 2^64-1 verified by matrix-order search"));
    reg.push_back(xorgens_info("tiny-raw:r2w8", tiny_r2w8_params(), false,
                               "exact: 2^16-1 = 65535, verified by exhaustive iteration"));
    reg.push_back(xorgens_info("tiny-raw:r2w16", tiny_r2w16_params(), false,
                               "exact: 2^32-1, verified by matrix-order search"));
    reg.push_back(xorgens_info("tiny-raw:r4w16", tiny_r4w16_params(), false,
                               "exact: 2^64-1, verified by matrix-order search"));

    GeneratorInfo xorwow;
    xorwow.id = "xorwow";
    xorwow.state_words = Xorwow::state_words();
    xorwow.period_display = "2^192-2^32";
    xorwow.period_note = "Marsaglia's XORWOW; own seeding, no CURAND stream claim";
    reg.push_back(xorwow);

    GeneratorInfo mt;
    mt.id = "mt19937";
    mt.state_words = Mt19937::state_words();
    mt.period_display = "2^19937-1";
    mt.period_note = "canonical MT19937";
    reg.push_back(mt);
    return reg;
}

} // namespace

const std::vector<GeneratorInfo>& generator_registry() {
    static const std::vector<GeneratorInfo> reg = build_registry();
    return reg;
}

const GeneratorInfo& find_generator(const std::string& id) {
    for (const auto& info : generator_registry())
        if (info.id == id)
            return info;
    throw std::invalid_argument("unknown generator: " + id);
}

std::unique_ptr<WordSource> make_source(const GeneratorInfo& info, std::uint64_t seed) {
    if (info.id == "xorwow")
        return std::make_unique<XorwowSource>(seed);
    if (info.id == "mt19937")
        return std::make_unique<Mt19937Source>(static_cast<std::uint32_t>(seed));
    if (info.weyl_combined)
        return std::make_unique<XorgensSource>(*info.params, seed);
    return std::make_unique<RawXorgensSource>(*info.params, seed);
}

} // namespace xg
