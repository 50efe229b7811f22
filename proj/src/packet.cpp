#include "aegisnet/packet.hpp"

#include <algorithm>
#include <stdexcept>

namespace aegisnet {

std::array<std::uint8_t, 20> AggregatePayload::encode() const {
    Bytes buf;
    buf.reserve(20);
    put_be64(buf, static_cast<std::uint64_t>(value));
    put_be32(buf, count);
    put_be64(buf, origin_ts_ms);
    std::array<std::uint8_t, 20> out;
    std::copy(buf.begin(), buf.end(), out.begin());
    return out;
}

AggregatePayload AggregatePayload::decode(std::span<const std::uint8_t> data) {
    if (data.size() != 20) throw std::invalid_argument("payload must be 20 bytes");
    AggregatePayload p;
    p.value = static_cast<std::int64_t>(get_be64(data.subspan(0, 8)));
    p.count = get_be32(data.subspan(8, 4));
    p.origin_ts_ms = get_be64(data.subspan(12, 8));
    return p;
}

AggregatePayload make_reading(std::int64_t value, std::uint64_t ts_ms) {
    return AggregatePayload{value, 1, ts_ms};
}

void fold(AggregatePayload& acc, const AggregatePayload& incoming, Aggregation fn) {
    switch (fn) {
        case Aggregation::Sum:
        case Aggregation::Mean:
            acc.value += incoming.value;
            break;
        case Aggregation::Max:
            acc.value = std::max(acc.value, incoming.value);
            break;
    }
    acc.count += incoming.count;
    acc.origin_ts_ms = std::min(acc.origin_ts_ms, incoming.origin_ts_ms);
}

Bytes DataPacket::header_bytes() const {
    Bytes out;
    out.reserve(32);
    put_be32(out, src);
    put_be32(out, dst);
    put_be32(out, cluster);
    put_be64(out, epoch);
    put_be64(out, ctr);
    put_be32(out, static_cast<std::uint32_t>(body.size()));
    return out;
}

Bytes DataPacket::mac_input() const {
    Bytes out = header_bytes();
    append(out, body);
    return out;
}

DataPacket encrypt_hop(const AggregatePayload& payload, const LinkKeyState& key, std::uint64_t ctr,
                       std::uint32_t cluster) {
    DataPacket pkt;
    pkt.src = key.link.child;
    pkt.dst = key.link.parent;
    pkt.cluster = cluster;
    pkt.epoch = key.current.epoch;
    pkt.ctr = ctr;
    auto plain = payload.encode();
    pkt.body = hop_encrypt(key.current, ctr, plain);
    pkt.tag = mac_tag(key.current, pkt.mac_input());
    return pkt;
}

DeliveryResult try_decrypt_hop(const DataPacket& packet, const LinkKeyState& state) {
    auto key = key_at_epoch(state, packet.epoch);
    if (!key) return {DeliveryStatus::EpochOutOfWindow, {}};
    if (!mac_verify(*key, packet.mac_input(), packet.tag)) return {DeliveryStatus::TagInvalid, {}};
    Bytes plain = hop_decrypt(*key, packet.ctr, packet.body);
    if (plain.size() != 20) return {DeliveryStatus::TagInvalid, {}};
    return {DeliveryStatus::Delivered, AggregatePayload::decode(plain)};
}

DeliveryResult receive_hop(const DataPacket& packet, LinkKeyState& state) {
    if (packet.epoch > state.current.epoch + state.window) {
        // genuine desync (extreme loss); flag for re-establishment
        state.healthy = false;
        return {DeliveryStatus::EpochOutOfWindow, {}};
    }
    if (packet.epoch < state.current.epoch) {
        // stale epoch: replayed or long-delayed packet, state keeps its ground
        return {DeliveryStatus::EpochOutOfWindow, {}};
    }
    DeliveryResult result = try_decrypt_hop(packet, state);
    if (result.status != DeliveryStatus::Delivered) return result;
    resync(state, packet.epoch);
    ratchet(state);  // post-delivery update, mirrors the sender's send-time ratchet
    return result;
}

}  // namespace aegisnet
