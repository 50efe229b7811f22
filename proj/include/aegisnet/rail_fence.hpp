#pragma once

#include <cstdint>
#include <span>

#include "aegisnet/bytes.hpp"

namespace aegisnet {

/// Zigzag transposition parameters. The zigzag has period 2*(rails-1); the
/// offset rotates the phase at which the first byte is written.
struct RailFenceParams {
    unsigned rails = 1;
    unsigned offset = 0;

    unsigned period() const { return rails >= 2 ? 2 * (rails - 1) : 1; }
    bool valid() const { return rails >= 1 && (rails == 1 ? offset == 0 : offset < period()); }
};

Bytes rail_fence_encode(std::span<const std::uint8_t> input, const RailFenceParams& params);
Bytes rail_fence_decode(std::span<const std::uint8_t> input, const RailFenceParams& params);

}  // namespace aegisnet
