#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <variant>
#include <vector>

namespace aegisnet {

enum class EventKind {
    RoundStart,
    PacketDelivery,
    HandshakeMsg,
    TopologyRebuild,
    NodeDeath,
    MetricSnapshot,
};

struct RoundStartEv {
    std::uint32_t round = 0;
};
struct PacketDeliveryEv {
    std::uint32_t hop_index = 0;  // index into the current round plan
    bool bs_hop = false;          // head -> base-station transfer
    std::uint32_t head = 0;       // valid when bs_hop
    bool injected = false;        // adversarial re-injection
    std::uint32_t inject_index = 0;
};
struct HandshakeMsgEv {
    std::uint32_t session = 0;
    std::uint8_t msg = 1;  // 1..3
    bool forged = false;   // adversarial impersonation attempt
};
struct TopologyRebuildEv {
    std::uint32_t round = 0;
};
struct NodeDeathEv {
    std::uint32_t node = 0;
};
struct MetricSnapshotEv {
    std::uint32_t round = 0;
};

using EventPayload = std::variant<RoundStartEv, PacketDeliveryEv, HandshakeMsgEv, TopologyRebuildEv,
                                  NodeDeathEv, MetricSnapshotEv>;

struct Event {
    std::uint64_t time_ms = 0;
    std::uint64_t sequence = 0;  // insertion order, breaks time ties
    EventPayload payload;

    EventKind kind() const { return static_cast<EventKind>(payload.index()); }
};

/// Deterministic min-queue ordered by (time, sequence). Refuses to schedule
/// into the past relative to the last dispatched event.
class EventQueue {
public:
    void schedule(std::uint64_t time_ms, EventPayload payload);
    std::optional<Event> pop();

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    std::uint64_t now_ms() const { return now_ms_; }

private:
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.time_ms != b.time_ms) return a.time_ms > b.time_ms;
            return a.sequence > b.sequence;
        }
    };

    std::priority_queue<Event, std::vector<Event>, Later> heap_;
    std::uint64_t next_sequence_ = 0;
    std::uint64_t now_ms_ = 0;
};

}  // namespace aegisnet
