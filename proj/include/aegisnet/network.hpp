#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aegisnet/rng.hpp"

namespace aegisnet {

enum class Role { Member, ClusterHead, BaseStation };

struct NodeState {
    std::uint32_t id = 0;
    double x = 0;
    double y = 0;
    std::int64_t energy_fj = 0;
    Role role = Role::Member;
    std::optional<std::uint32_t> parent;
    std::vector<std::uint32_t> children;
    bool alive = true;
};

struct TreeEdge {
    std::uint32_t parent = 0;
    std::uint32_t child = 0;
    double length_m = 0;
};

struct Cluster {
    std::uint32_t head = 0;
    std::vector<std::uint32_t> members;  // excludes the head
    std::vector<TreeEdge> edges;
};

struct ClusterTopology {
    std::vector<Cluster> clusters;
    std::uint32_t base_station = 0;
    std::vector<std::uint32_t> isolated;

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto& c : clusters) n += c.edges.size();
        return n;
    }
};

struct DeployParams {
    std::uint32_t node_count = 0;
    double area_width_m = 0;
    double area_height_m = 0;
    std::optional<double> bs_x;  // defaults to area center
    std::optional<double> bs_y;
    std::int64_t initial_energy_fj = 0;
};

double node_distance(const NodeState& a, const NodeState& b);

/// Places node_count sensor nodes uniformly at random plus one base station
/// (id = node_count) at the configured position. Throws ConfigError on
/// non-positive dimensions or zero nodes.
std::vector<NodeState> deploy(const DeployParams& params, Rng& rng);

/// Picks the k alive non-base-station nodes maximizing
/// 0.7*(energy/initial) + 0.3*(1 - dist_to_bs/d_max), ties by lower id.
/// Throws InsufficientNodes when fewer than k candidates are alive.
std::vector<std::uint32_t> elect_cluster_heads(std::span<const NodeState> nodes, std::size_t k,
                                               double energy_weight = 0.7,
                                               double distance_weight = 0.3);

/// Assigns each alive member to the nearest head, then builds a BFS tree per
/// cluster over edges within radio range. Parent choice minimizes (hop count,
/// distance to head, id). Unreachable members are listed as isolated. Updates
/// roles and tree links on `nodes`.
ClusterTopology build_aggregation_tree(std::span<const std::uint32_t> heads,
                                       std::vector<NodeState>& nodes, double range_m);

}  // namespace aegisnet
