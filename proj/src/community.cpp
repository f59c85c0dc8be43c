#include "isnad/community.hpp"

#include <algorithm>
#include <numeric>

#include "isnad/errors.hpp"
#include "isnad/random.hpp"

namespace isnad {

void UndirectedGraph::add_edge(NodeIndex u, NodeIndex v, double weight) {
    auto bump = [&](NodeIndex from, NodeIndex to) {
        auto& row = adjacency_.at(from);
        auto it = std::lower_bound(row.begin(), row.end(), to, [](const Link& l, NodeIndex key) { return l.node < key; });
        if (it != row.end() && it->node == to) {
            it->weight += weight;
        } else {
            row.insert(it, Link{to, weight});
        }
    };
    bump(u, v);
    if (u != v) bump(v, u);
}

double UndirectedGraph::weight(NodeIndex u, NodeIndex v) const {
    const auto& row = adjacency_.at(u);
    auto it = std::lower_bound(row.begin(), row.end(), v, [](const Link& l, NodeIndex key) { return l.node < key; });
    return (it != row.end() && it->node == v) ? it->weight : 0.0;
}

double UndirectedGraph::degree(NodeIndex u) const {
    double k = 0.0;
    for (const auto& link : adjacency_.at(u)) k += link.node == u ? 2.0 * link.weight : link.weight;
    return k;
}

double UndirectedGraph::total_degree() const {
    double total = 0.0;
    for (NodeIndex u = 0; u < adjacency_.size(); ++u) total += degree(u);
    return total;
}

UndirectedGraph symmetrize(const NarratorGraph& graph) {
    UndirectedGraph out(graph.node_count());
    for (const auto& e : graph.edges()) out.add_edge(e.source, e.target, static_cast<double>(e.weight));
    return out;
}

double modularity(const UndirectedGraph& graph, std::span<const std::size_t> assignment, double resolution) {
    const std::size_t n = graph.node_count();
    if (assignment.size() != n) throw DomainError("assignment does not cover every node");
    const double two_m = graph.total_degree();
    if (!(two_m > 0.0)) throw DomainError("modularity is undefined on a graph with zero total weight");

    const std::size_t labels = n == 0 ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
    std::vector<double> internal(labels, 0.0), total(labels, 0.0);
    for (NodeIndex u = 0; u < n; ++u) {
        const auto c = assignment[u];
        total[c] += graph.degree(u);
        for (const auto& link : graph.neighbors(u)) {
            if (link.node == u) {
                internal[c] += 2.0 * link.weight;
            } else if (assignment[link.node] == c) {
                internal[c] += link.weight;
            }
        }
    }
    double q = 0.0;
    for (std::size_t c = 0; c < labels; ++c) {
        const double share = total[c] / two_m;
        q += internal[c] / two_m - resolution * share * share;
    }
    return q;
}

namespace {

void renumber(std::vector<std::size_t>& assignment) {
    constexpr auto kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> relabel(assignment.size(), kUnset);
    std::size_t next = 0;
    for (auto& c : assignment) {
        if (relabel[c] == kUnset) relabel[c] = next++;
        c = relabel[c];
    }
}

std::size_t label_count(const std::vector<std::size_t>& assignment) {
    return assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
}

// Collapses each community of a dense assignment into one node; internal weight becomes a self-loop.
UndirectedGraph aggregate(const UndirectedGraph& graph, const std::vector<std::size_t>& assignment) {
    UndirectedGraph out(label_count(assignment));
    for (NodeIndex u = 0; u < graph.node_count(); ++u) {
        for (const auto& link : graph.neighbors(u)) {
            if (link.node < u) continue;
            out.add_edge(assignment[u], assignment[link.node], link.weight);
        }
    }
    return out;
}

// Moves single nodes between neighboring communities while some move gains
// at least min_gain. Returns whether anything moved.
bool local_moving(const UndirectedGraph& graph, std::vector<std::size_t>& assignment, Rng& rng,
                  const LouvainConfig& config) {
    const std::size_t n = graph.node_count();
    const double two_m = graph.total_degree();
    const double m = two_m / 2.0;
    const double gamma = config.resolution;

    std::vector<double> degree(n);
    std::vector<double> community_total(n, 0.0);
    for (NodeIndex u = 0; u < n; ++u) {
        degree[u] = graph.degree(u);
        community_total[assignment[u]] += degree[u];
    }

    std::vector<NodeIndex> order(n);
    std::iota(order.begin(), order.end(), NodeIndex{0});
    rng.shuffle(std::span<NodeIndex>(order));

    std::vector<double> link_weight(n, 0.0);
    std::vector<std::size_t> touched;
    bool moved_any = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto u : order) {
            const auto own = assignment[u];
            const double k = degree[u];
            touched.clear();
            for (const auto& link : graph.neighbors(u)) {
                if (link.node == u) continue;
                const auto c = assignment[link.node];
                if (link_weight[c] == 0.0) touched.push_back(c);
                link_weight[c] += link.weight;
            }

            community_total[own] -= k;
            auto gain = [&](std::size_t c) { return link_weight[c] / m - gamma * community_total[c] * k / (2.0 * m * m); };
            const double stay = gain(own);

            std::sort(touched.begin(), touched.end());
            std::size_t best = own;
            double best_gain = stay;
            bool have_candidate = false;
            for (const auto c : touched) {
                if (c == own) continue;
                const double g = gain(c);
                if (!have_candidate || g > best_gain) {
                    best = c;
                    best_gain = g;
                    have_candidate = true;
                }
            }
            if (have_candidate && best_gain - stay >= config.min_gain) {
                assignment[u] = best;
                moved = true;
                moved_any = true;
            }
            community_total[assignment[u]] += k;
            for (const auto c : touched) link_weight[c] = 0.0;
        }
    }
    return moved_any;
}

}  // namespace

std::vector<std::size_t> louvain_assignment(const UndirectedGraph& graph, const LouvainConfig& config) {
    if (!(config.resolution > 0.0)) throw DomainError("resolution must be positive");
    if (!(config.min_gain > 0.0)) throw DomainError("min_gain must be positive");
    if (!(graph.total_degree() > 0.0)) throw DomainError("louvain needs a graph with at least one weighted edge");

    Rng rng(config.seed);
    const std::size_t n = graph.node_count();
    std::vector<std::size_t> assignment(n);
    std::iota(assignment.begin(), assignment.end(), std::size_t{0});

    while (true) {
        // Aggregation levels, starting from the current partition of the original nodes.
        renumber(assignment);
        UndirectedGraph level = aggregate(graph, assignment);
        while (true) {
            std::vector<std::size_t> level_assignment(level.node_count());
            std::iota(level_assignment.begin(), level_assignment.end(), std::size_t{0});
            if (!local_moving(level, level_assignment, rng, config)) break;
            renumber(level_assignment);
            for (auto& c : assignment) c = level_assignment[c];
            level = aggregate(level, level_assignment);
        }
        // Aggregated moves can leave an original node better off elsewhere; a
        // final sweep on the original graph restores single-node optimality.
        if (!local_moving(graph, assignment, rng, config)) break;
    }
    renumber(assignment);
    return assignment;
}

std::size_t Partition::community_of(std::string_view id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) throw LookupError("'" + std::string(id) + "' has no community");
    return community[static_cast<std::size_t>(it - ids.begin())];
}

Partition louvain(const NarratorGraph& graph, const LouvainConfig& config) {
    if (graph.edge_count() == 0) throw DomainError("louvain needs a graph with at least one edge");
    const auto undirected = symmetrize(graph);
    Partition partition;
    partition.ids = graph.ids();
    partition.community = louvain_assignment(undirected, config);
    partition.community_count = label_count(partition.community);
    partition.modularity = modularity(undirected, partition.community, config.resolution);
    return partition;
}

}  // namespace isnad
