#pragma once

#include <array>
#include <cstdint>

#include "aegisnet/bytes.hpp"
#include "aegisnet/keys.hpp"

namespace aegisnet {

enum class Aggregation { Sum, Mean, Max };

/// Running aggregate carried up the tree. `value` is the sum for sum/mean and
/// the running maximum for max; `count` is the number of readings folded in;
/// `origin_ts_ms` is the earliest generation timestamp among them.
struct AggregatePayload {
    std::int64_t value = 0;
    std::uint32_t count = 0;
    std::uint64_t origin_ts_ms = 0;

    bool operator==(const AggregatePayload&) const = default;

    /// Canonical 20-byte encoding: value (8, two's complement) || count (4)
    /// || timestamp (8), all big-endian.
    std::array<std::uint8_t, 20> encode() const;
    static AggregatePayload decode(std::span<const std::uint8_t> data);
};

AggregatePayload make_reading(std::int64_t value, std::uint64_t ts_ms);
void fold(AggregatePayload& acc, const AggregatePayload& incoming, Aggregation fn);

struct DataPacket {
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
    std::uint32_t cluster = 0;
    std::uint64_t epoch = 0;
    std::uint64_t ctr = 0;
    Bytes body;
    std::array<std::uint8_t, 16> tag{};

    /// src || dst || cluster || epoch || ctr || body length, big-endian.
    Bytes header_bytes() const;
    Bytes mac_input() const;
};

/// Builds a packet from the sender's link state at its current epoch:
/// body = rail_fence(plain XOR keystream(key, ctr)), tag = MAC(header||body).
/// Does not mutate the state; the caller ratchets after sending.
DataPacket encrypt_hop(const AggregatePayload& payload, const LinkKeyState& key, std::uint64_t ctr,
                       std::uint32_t cluster);

enum class DeliveryStatus { Delivered, TagInvalid, EpochOutOfWindow };

struct DeliveryResult {
    DeliveryStatus status = DeliveryStatus::TagInvalid;
    AggregatePayload payload;
};

/// Verification against a state copy ratcheted to the packet epoch; the
/// caller's state is never touched. Used by receivers (pre-commit) and by the
/// compromise attacker.
DeliveryResult try_decrypt_hop(const DataPacket& packet, const LinkKeyState& state);

/// Receiver path: window check, tag verification against the key at the
/// packet's epoch, decrypt, then commit (state advances one past the packet
/// epoch). Epochs beyond the window flag the link for re-establishment;
/// stale epochs and bad tags leave the state unchanged.
DeliveryResult receive_hop(const DataPacket& packet, LinkKeyState& state);

}  // namespace aegisnet
