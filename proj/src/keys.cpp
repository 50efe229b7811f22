#include "aegisnet/keys.hpp"

#include <set>
#include <stdexcept>

namespace aegisnet {

void ratchet(LinkKeyState& state) {
    state.current.bytes = kdf(state.current, "ratchet", state.current.epoch + 1);
    state.current.epoch += 1;
}

ResyncStatus resync(LinkKeyState& state, std::uint64_t observed_epoch) {
    if (observed_epoch < state.current.epoch ||
        observed_epoch > state.current.epoch + state.window) {
        return ResyncStatus::EpochOutOfWindow;
    }
    while (state.current.epoch < observed_epoch) ratchet(state);
    return ResyncStatus::Accepted;
}

std::optional<SymmetricKey> key_at_epoch(const LinkKeyState& state, std::uint64_t target) {
    if (target < state.current.epoch || target > state.current.epoch + state.window)
        return std::nullopt;
    LinkKeyState scratch = state;
    while (scratch.current.epoch < target) ratchet(scratch);
    return scratch.current;
}

std::map<std::uint32_t, KeyRing> establish_link_keys(const ClusterTopology& topology, Rng& rng,
                                                     std::uint32_t window) {
    std::map<std::uint32_t, KeyRing> rings;
    std::set<std::array<std::uint8_t, 16>> seen;
    for (const auto& cluster : topology.clusters) {
        for (const auto& edge : cluster.edges) {
            LinkKeyState state;
            state.link = LinkId{edge.parent, edge.child};
            state.window = window;
            rng.fill(state.current.bytes);
            if (!seen.insert(state.current.bytes).second)
                throw std::runtime_error("duplicate link key drawn");
            rings[edge.parent][state.link] = state;
            rings[edge.child][state.link] = state;
        }
    }
    return rings;
}

}  // namespace aegisnet
