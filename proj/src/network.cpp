#include "aegisnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "aegisnet/errors.hpp"

namespace aegisnet {

double node_distance(const NodeState& a, const NodeState& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<NodeState> deploy(const DeployParams& params, Rng& rng) {
    if (params.node_count == 0) throw ConfigError("nodes", "node count must be >= 1");
    if (params.area_width_m <= 0) throw ConfigError("area_width_m", "must be > 0");
    if (params.area_height_m <= 0) throw ConfigError("area_height_m", "must be > 0");

    std::vector<NodeState> nodes;
    nodes.reserve(params.node_count + 1);
    for (std::uint32_t i = 0; i < params.node_count; ++i) {
        NodeState n;
        n.id = i;
        n.x = rng.uniform(0.0, params.area_width_m);
        n.y = rng.uniform(0.0, params.area_height_m);
        n.energy_fj = params.initial_energy_fj;
        n.role = Role::Member;
        nodes.push_back(std::move(n));
    }

    NodeState bs;
    bs.id = params.node_count;
    bs.x = params.bs_x.value_or(params.area_width_m / 2);
    bs.y = params.bs_y.value_or(params.area_height_m / 2);
    bs.energy_fj = params.initial_energy_fj;
    bs.role = Role::BaseStation;
    nodes.push_back(std::move(bs));
    return nodes;
}

std::vector<std::uint32_t> elect_cluster_heads(std::span<const NodeState> nodes, std::size_t k,
                                               double energy_weight, double distance_weight) {
    const NodeState* bs = nullptr;
    for (const auto& n : nodes) {
        if (n.role == Role::BaseStation) bs = &n;
    }
    if (bs == nullptr) throw ConfigError("nodes", "no base station present");

    struct Candidate {
        double score;
        std::uint32_t id;
    };
    std::vector<Candidate> candidates;
    std::int64_t initial_max = 0;
    double d_max = 0;
    for (const auto& n : nodes) {
        if (n.role == Role::BaseStation || !n.alive) continue;
        initial_max = std::max(initial_max, n.energy_fj);
        d_max = std::max(d_max, node_distance(n, *bs));
    }
    for (const auto& n : nodes) {
        if (n.role == Role::BaseStation || !n.alive) continue;
        double energy_term =
            initial_max > 0 ? static_cast<double>(n.energy_fj) / static_cast<double>(initial_max) : 0.0;
        double dist_term = d_max > 0 ? 1.0 - node_distance(n, *bs) / d_max : 1.0;
        candidates.push_back({energy_weight * energy_term + distance_weight * dist_term, n.id});
    }

    if (candidates.size() < k)
        throw InsufficientNodes("fewer alive nodes than requested cluster heads");

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.id < b.id;
    });

    std::vector<std::uint32_t> heads;
    heads.reserve(k);
    for (std::size_t i = 0; i < k; ++i) heads.push_back(candidates[i].id);
    std::sort(heads.begin(), heads.end());
    return heads;
}

ClusterTopology build_aggregation_tree(std::span<const std::uint32_t> heads,
                                       std::vector<NodeState>& nodes, double range_m) {
    if (heads.empty()) throw ConfigError("heads", "head set must be non-empty");

    ClusterTopology topo;
    for (auto& n : nodes) {
        n.parent.reset();
        n.children.clear();
        if (n.role == Role::BaseStation) {
            topo.base_station = n.id;
        } else {
            n.role = Role::Member;
        }
    }

    std::map<std::uint32_t, std::size_t> cluster_of_head;
    for (std::uint32_t h : heads) {
        nodes[h].role = Role::ClusterHead;
        cluster_of_head[h] = topo.clusters.size();
        topo.clusters.push_back(Cluster{h, {}, {}});
    }

    // nearest-head assignment, ties by lower head id (heads are sorted)
    for (auto& n : nodes) {
        if (n.role != Role::Member || !n.alive) continue;
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_head = heads.front();
        for (std::uint32_t h : heads) {
            double d = node_distance(n, nodes[h]);
            if (d < best) {
                best = d;
                best_head = h;
            }
        }
        topo.clusters[cluster_of_head[best_head]].members.push_back(n.id);
    }

    // per-cluster BFS from the head; parent minimizes (hop, dist-to-head, id)
    for (auto& cluster : topo.clusters) {
        const NodeState& head = nodes[cluster.head];
        std::map<std::uint32_t, unsigned> hop;  // reached nodes
        hop[cluster.head] = 0;
        std::vector<std::uint32_t> frontier{cluster.head};

        while (!frontier.empty()) {
            // candidate children of the current frontier, best parent each
            struct Choice {
                std::uint32_t parent;
                double parent_dist_to_head;
            };
            std::map<std::uint32_t, Choice> chosen;
            for (std::uint32_t m : cluster.members) {
                if (hop.count(m)) continue;
                for (std::uint32_t f : frontier) {
                    if (node_distance(nodes[m], nodes[f]) > range_m) continue;
                    double fd = node_distance(nodes[f], head);
                    auto it = chosen.find(m);
                    if (it == chosen.end() || fd < it->second.parent_dist_to_head ||
                        (fd == it->second.parent_dist_to_head && f < it->second.parent)) {
                        chosen[m] = {f, fd};
                    }
                }
            }
            std::vector<std::uint32_t> next;
            for (const auto& [child, choice] : chosen) {
                hop[child] = hop[choice.parent] + 1;
                nodes[child].parent = choice.parent;
                nodes[choice.parent].children.push_back(child);
                cluster.edges.push_back(
                    {choice.parent, child, node_distance(nodes[choice.parent], nodes[child])});
                next.push_back(child);
            }
            frontier = std::move(next);
        }

        std::vector<std::uint32_t> reached;
        for (std::uint32_t m : cluster.members) {
            if (hop.count(m)) {
                reached.push_back(m);
            } else {
                topo.isolated.push_back(m);
            }
        }
        cluster.members = std::move(reached);
    }

    std::sort(topo.isolated.begin(), topo.isolated.end());
    return topo;
}

}  // namespace aegisnet
