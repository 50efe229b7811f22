#include "aegisnet/rail_fence.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace aegisnet {

namespace {

void check(const RailFenceParams& params) {
    if (!params.valid()) throw std::invalid_argument("invalid rail fence parameters");
}

unsigned rail_at(std::size_t index, const RailFenceParams& params) {
    unsigned phase = static_cast<unsigned>((index + params.offset) % params.period());
    return phase < params.rails ? phase : params.period() - phase;
}

// Read-out order of input positions: rail by rail, positions ascending.
std::vector<std::size_t> read_order(std::size_t n, const RailFenceParams& params) {
    std::vector<std::size_t> order;
    order.reserve(n);
    if (params.rails == 1) {
        order.resize(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        return order;
    }
    std::vector<unsigned> rail(n);
    for (std::size_t i = 0; i < n; ++i) rail[i] = rail_at(i, params);
    for (unsigned r = 0; r < params.rails; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            if (rail[i] == r) order.push_back(i);
        }
    }
    return order;
}

}  // namespace

Bytes rail_fence_encode(std::span<const std::uint8_t> input, const RailFenceParams& params) {
    check(params);
    auto order = read_order(input.size(), params);
    Bytes out;
    out.reserve(input.size());
    for (std::size_t pos : order) out.push_back(input[pos]);
    return out;
}

Bytes rail_fence_decode(std::span<const std::uint8_t> input, const RailFenceParams& params) {
    check(params);
    auto order = read_order(input.size(), params);
    Bytes out(input.size());
    for (std::size_t k = 0; k < input.size(); ++k) out[order[k]] = input[k];
    return out;
}

}  // namespace aegisnet
