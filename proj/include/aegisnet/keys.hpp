#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>

#include "aegisnet/crypto.hpp"
#include "aegisnet/network.hpp"
#include "aegisnet/rng.hpp"

namespace aegisnet {

/// Directed tree edge, oriented parent <- child (data flows child to parent).
struct LinkId {
    std::uint32_t parent = 0;
    std::uint32_t child = 0;

    auto operator<=>(const LinkId&) const = default;
};

enum class ResyncStatus { Accepted, EpochOutOfWindow };

/// Per-link ratchet state. One copy lives at each endpoint of the edge; the
/// child copy drives sends, the parent copy follows via the packet epoch.
struct LinkKeyState {
    LinkId link{};
    SymmetricKey current{};            // epoch e key; e counts ratchets since setup
    std::uint32_t window = 8;          // acceptance window W
    std::uint64_t send_ctr = 0;        // per-link packet counter (sender side)
    bool healthy = true;               // cleared when flagged for re-establishment

    std::uint64_t epoch() const { return current.epoch; }
};

using KeyRing = std::map<LinkId, LinkKeyState>;

/// Advances the key one epoch: bytes <- kdf(current, "ratchet", epoch + 1).
/// The previous key material is overwritten.
void ratchet(LinkKeyState& state);

/// Accepts observed epochs in [current, current + window]; fast-forwards the
/// state to the observed epoch. Out-of-window observations leave the state
/// unchanged.
ResyncStatus resync(LinkKeyState& state, std::uint64_t observed_epoch);

/// Key the state would hold at `target` epoch, without mutating it.
/// Empty when the target lies outside the acceptance window.
std::optional<SymmetricKey> key_at_epoch(const LinkKeyState& state, std::uint64_t target);

/// Draws a fresh epoch-0 key for every tree edge; both endpoints receive
/// byte-identical copies (node id -> ring). Distinctness across edges is
/// asserted outright.
std::map<std::uint32_t, KeyRing> establish_link_keys(const ClusterTopology& topology, Rng& rng,
                                                     std::uint32_t window = 8);

}  // namespace aegisnet
