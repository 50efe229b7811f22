#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "aegisnet/packet.hpp"

namespace aegisnet {

struct TimingParams {
    std::uint32_t tx_latency_ms = 10;
    std::uint32_t proc_latency_ms = 2;

    std::uint32_t hop_latency_ms() const { return tx_latency_ms + proc_latency_ms; }
};

/// One scheduled transmission: the child of `link` flushes its accumulator at
/// flush_ms; the packet reaches the parent at arrive_ms.
struct HopPlan {
    std::uint64_t flush_ms = 0;
    std::uint64_t arrive_ms = 0;
    LinkId link{};
    std::uint32_t cluster = 0;
};

struct RoundPlan {
    std::vector<HopPlan> hops;                          // ordered by arrival
    std::map<std::uint32_t, std::uint64_t> head_ready_ms;  // aggregate completion per head
    std::uint64_t last_ms = 0;
};

/// Post-order schedule: leaves flush at round start; a relay flushes once all
/// children arrivals are in plus processing time. One packet per edge.
RoundPlan plan_round(const ClusterTopology& topology, const TimingParams& timing,
                     std::uint64_t start_ms);

enum class TraceKind { Sent, Delivered, TagInvalid, EpochOow };
const char* trace_kind_name(TraceKind kind);

struct TraceEvent {
    std::uint64_t time_ms = 0;
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
    std::uint64_t epoch = 0;
    std::uint64_t ctr = 0;
    TraceKind kind = TraceKind::Sent;

    bool operator==(const TraceEvent&) const = default;
};

/// Adversary intercept point. Runs on every in-flight packet; may mutate the
/// packet (tamper) or return false to drop it.
class PacketHook {
public:
    virtual ~PacketHook() = default;
    virtual bool on_data_packet(DataPacket& packet, const LinkId& link, std::uint64_t time_ms) = 0;
};

/// Hop-by-hop state for one collection round: per-node accumulators plus the
/// key rings. The sender ratchets at flush time; the receiver follows on
/// verified delivery.
class DataPlane {
public:
    DataPlane(const ClusterTopology& topology, std::map<std::uint32_t, KeyRing>& rings,
              Aggregation fn);

    /// Seeds accumulators with each reached node's own reading.
    void begin_round(const std::map<std::uint32_t, std::int64_t>& readings, std::uint64_t ts_ms);

    bool has_accumulator(std::uint32_t node) const;
    const AggregatePayload& accumulator(std::uint32_t node) const;

    /// Builds the packet for this edge from the child's accumulator and
    /// advances the sender's ratchet and packet counter.
    DataPacket flush(const LinkId& link, std::uint32_t cluster);

    /// Builds a packet carrying an explicit payload (store-and-forward mode).
    DataPacket send_payload(const AggregatePayload& payload, const LinkId& link,
                            std::uint32_t cluster);

    /// Receiver path; folds into the destination accumulator when one exists.
    DeliveryResult deliver(const DataPacket& packet);

    std::map<std::uint32_t, AggregatePayload> head_payloads() const;
    LinkKeyState* link_state(std::uint32_t owner, const LinkId& link);

private:
    const ClusterTopology& topology_;
    std::map<std::uint32_t, KeyRing>& rings_;
    Aggregation fn_;
    std::map<std::uint32_t, AggregatePayload> accumulators_;
};

struct CollectResult {
    std::map<std::uint32_t, AggregatePayload> head_payloads;
    std::vector<TraceEvent> trace;
    std::uint64_t packets_sent = 0;
    std::uint64_t packets_delivered = 0;
};

/// Runs one full intra-cluster round synchronously in schedule order.
CollectResult collect_round(const ClusterTopology& topology,
                            std::map<std::uint32_t, KeyRing>& rings,
                            const std::map<std::uint32_t, std::int64_t>& readings, Aggregation fn,
                            const TimingParams& timing, std::uint64_t start_ms,
                            PacketHook* hook = nullptr);

}  // namespace aegisnet
