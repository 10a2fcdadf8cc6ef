#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xg/params.hpp"
#include "xg/stream.hpp"

namespace xg {

/// One selectable generator: stream factory plus the static facts the
/// `params` and `bench` commands report.
struct GeneratorInfo {
    std::string id;
    std::optional<GeneratorParams> params; // xorgens-family entries only
    bool weyl_combined = false;            // false for the raw (ablated) streams
    std::size_t state_words = 0;
    std::string period_display;
    std::string period_note;
};

/// ids: xorgensgp32, xorgens-raw, xorwow, mt19937, tiny:<name>,
/// tiny-raw:<name> with <name> in {r2w8, r2w16, r4w16}.
const std::vector<GeneratorInfo>& generator_registry();

/// Throws std::invalid_argument for unknown ids.
const GeneratorInfo& find_generator(const std::string& id);

std::unique_ptr<WordSource> make_source(const GeneratorInfo& info, std::uint64_t seed);

} // namespace xg
