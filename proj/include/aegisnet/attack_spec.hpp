#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>

#include "aegisnet/keys.hpp"

namespace aegisnet {

enum class AttackKind { Replay, Impersonate, CompromiseLink, Drop, Tamper };

const char* attack_kind_name(AttackKind kind);

/// One configured attack. Selectors that resolve to nothing at fire time make
/// the attack a no-op for that round.
struct AttackSpec {
    AttackKind kind = AttackKind::Tamper;
    std::optional<LinkId> target_link;     // explicit edge
    bool random_link = false;              // pick one seeded-random live edge at fire time
    std::optional<std::uint32_t> target_node;
    std::uint32_t start_round = 0;
    std::uint32_t end_round = std::numeric_limits<std::uint32_t>::max();
    double probability = 1.0;              // per-packet chance for drop/tamper
    std::uint64_t count = 0;               // attempt budget; 0 = unbounded

    bool operator==(const AttackSpec&) const = default;

    bool active(std::uint32_t round) const { return round >= start_round && round <= end_round; }
    bool matches(const LinkId& link) const {
        if (target_link) return *target_link == link;
        if (target_node) return *target_node == link.parent || *target_node == link.child;
        return true;
    }
};

struct AttackOutcome {
    std::uint64_t attempts = 0;
    std::uint64_t accepted_by_victim = 0;
    std::uint64_t plaintexts_recovered = 0;
    std::set<LinkId> links_affected;
    std::uint64_t links_flagged = 0;  // permanent-desync events caused
};

}  // namespace aegisnet
