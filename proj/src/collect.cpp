#include "aegisnet/collect.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace aegisnet {

const char* trace_kind_name(TraceKind kind) {
    switch (kind) {
        case TraceKind::Sent: return "sent";
        case TraceKind::Delivered: return "delivered";
        case TraceKind::TagInvalid: return "tag_invalid";
        case TraceKind::EpochOow: return "epoch_oow";
    }
    return "?";
}

RoundPlan plan_round(const ClusterTopology& topology, const TimingParams& timing,
                     std::uint64_t start_ms) {
    RoundPlan plan;
    plan.last_ms = start_ms;

    for (std::size_t ci = 0; ci < topology.clusters.size(); ++ci) {
        const Cluster& cluster = topology.clusters[ci];
        std::map<std::uint32_t, std::vector<std::uint32_t>> children;
        std::map<std::uint32_t, std::uint32_t> parent_of;
        for (const auto& e : cluster.edges) {
            children[e.parent].push_back(e.child);
            parent_of[e.child] = e.parent;
        }

        std::map<std::uint32_t, std::uint64_t> arrive_at;  // child -> arrival at parent

        // post-order: children flush before their parent
        std::function<void(std::uint32_t)> visit = [&](std::uint32_t node) {
            std::uint64_t ready = start_ms;
            auto it = children.find(node);
            if (it != children.end()) {
                for (std::uint32_t c : it->second) {
                    visit(c);
                    ready = std::max(ready, arrive_at[c] + timing.proc_latency_ms);
                }
            }
            if (node == cluster.head) {
                plan.head_ready_ms[node] = ready;
                plan.last_ms = std::max(plan.last_ms, ready);
                return;
            }
            std::uint64_t flush = ready;
            std::uint64_t arrive = flush + timing.tx_latency_ms;
            arrive_at[node] = arrive;
            plan.hops.push_back({flush, arrive, LinkId{parent_of[node], node},
                                 static_cast<std::uint32_t>(ci)});
            plan.last_ms = std::max(plan.last_ms, arrive);
        };
        visit(cluster.head);
    }

    std::stable_sort(plan.hops.begin(), plan.hops.end(),
                     [](const HopPlan& a, const HopPlan& b) { return a.arrive_ms < b.arrive_ms; });
    return plan;
}

DataPlane::DataPlane(const ClusterTopology& topology, std::map<std::uint32_t, KeyRing>& rings,
                     Aggregation fn)
    : topology_(topology), rings_(rings), fn_(fn) {}

void DataPlane::begin_round(const std::map<std::uint32_t, std::int64_t>& readings,
                            std::uint64_t ts_ms) {
    accumulators_.clear();
    for (const auto& cluster : topology_.clusters) {
        auto seed = [&](std::uint32_t node) {
            auto it = readings.find(node);
            if (it != readings.end()) accumulators_[node] = make_reading(it->second, ts_ms);
        };
        seed(cluster.head);
        for (std::uint32_t m : cluster.members) seed(m);
    }
}

bool DataPlane::has_accumulator(std::uint32_t node) const { return accumulators_.count(node) > 0; }

const AggregatePayload& DataPlane::accumulator(std::uint32_t node) const {
    return accumulators_.at(node);
}

LinkKeyState* DataPlane::link_state(std::uint32_t owner, const LinkId& link) {
    auto ring_it = rings_.find(owner);
    if (ring_it == rings_.end()) return nullptr;
    auto it = ring_it->second.find(link);
    return it == ring_it->second.end() ? nullptr : &it->second;
}

DataPacket DataPlane::flush(const LinkId& link, std::uint32_t cluster) {
    return send_payload(accumulators_.at(link.child), link, cluster);
}

DataPacket DataPlane::send_payload(const AggregatePayload& payload, const LinkId& link,
                                   std::uint32_t cluster) {
    LinkKeyState* state = link_state(link.child, link);
    if (state == nullptr) throw std::logic_error("flush on unkeyed link");
    DataPacket pkt = encrypt_hop(payload, *state, state->send_ctr, cluster);
    state->send_ctr += 1;
    ratchet(*state);  // sender treats the transmission as the end of the connection
    return pkt;
}

DeliveryResult DataPlane::deliver(const DataPacket& packet) {
    LinkKeyState* state = link_state(packet.dst, LinkId{packet.dst, packet.src});
    if (state == nullptr) return {DeliveryStatus::TagInvalid, {}};
    DeliveryResult result = receive_hop(packet, *state);
    if (result.status == DeliveryStatus::Delivered) {
        auto acc = accumulators_.find(packet.dst);
        if (acc != accumulators_.end()) fold(acc->second, result.payload, fn_);
    }
    return result;
}

std::map<std::uint32_t, AggregatePayload> DataPlane::head_payloads() const {
    std::map<std::uint32_t, AggregatePayload> out;
    for (const auto& cluster : topology_.clusters) {
        auto it = accumulators_.find(cluster.head);
        if (it != accumulators_.end()) out[cluster.head] = it->second;
    }
    return out;
}

CollectResult collect_round(const ClusterTopology& topology,
                            std::map<std::uint32_t, KeyRing>& rings,
                            const std::map<std::uint32_t, std::int64_t>& readings, Aggregation fn,
                            const TimingParams& timing, std::uint64_t start_ms, PacketHook* hook) {
    RoundPlan plan = plan_round(topology, timing, start_ms);
    DataPlane plane(topology, rings, fn);
    plane.begin_round(readings, start_ms);

    CollectResult result;
    for (const HopPlan& hop : plan.hops) {
        DataPacket pkt = plane.flush(hop.link, hop.cluster);
        result.trace.push_back({hop.flush_ms, pkt.src, pkt.dst, pkt.epoch, pkt.ctr, TraceKind::Sent});
        result.packets_sent += 1;

        if (hook != nullptr && !hook->on_data_packet(pkt, hop.link, hop.arrive_ms)) continue;

        DeliveryResult dr = plane.deliver(pkt);
        TraceKind kind = TraceKind::Delivered;
        if (dr.status == DeliveryStatus::TagInvalid) kind = TraceKind::TagInvalid;
        if (dr.status == DeliveryStatus::EpochOutOfWindow) kind = TraceKind::EpochOow;
        if (dr.status == DeliveryStatus::Delivered) result.packets_delivered += 1;
        result.trace.push_back({hop.arrive_ms, pkt.src, pkt.dst, pkt.epoch, pkt.ctr, kind});
    }

    result.head_payloads = plane.head_payloads();
    return result;
}

}  // namespace aegisnet
