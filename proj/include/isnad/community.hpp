#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isnad/graph.hpp"

namespace isnad {

/// Weighted undirected graph. A self-loop is stored once in its node's
/// neighbor list and counts twice toward that node's weighted degree.
class UndirectedGraph {
public:
    struct Link {
        NodeIndex node = 0;
        double weight = 0.0;
    };

    UndirectedGraph() = default;
    explicit UndirectedGraph(std::size_t node_count) : adjacency_(node_count) {}

    /// Adds `weight` to the u-v edge, creating it if needed.
    void add_edge(NodeIndex u, NodeIndex v, double weight);

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    /// Sorted by neighbor index.
    std::span<const Link> neighbors(NodeIndex u) const { return adjacency_.at(u); }
    double weight(NodeIndex u, NodeIndex v) const;
    double degree(NodeIndex u) const;
    /// Sum of all weighted degrees, i.e. 2m.
    double total_degree() const;

private:
    std::vector<std::vector<Link>> adjacency_;
};

/// Undirected weight(u, v) = w(u->v) + w(v->u). Node indices are preserved.
UndirectedGraph symmetrize(const NarratorGraph& graph);

/// Q = sum_c [ in(c)/2m - resolution * (tot(c)/2m)^2 ].
/// Throws DomainError when the graph has zero total weight or the assignment does not cover every node.
double modularity(const UndirectedGraph& graph, std::span<const std::size_t> assignment, double resolution = 1.0);

struct LouvainConfig {
    double resolution = 1.0;
    std::uint64_t seed = 42;   // drives the node visit order
    double min_gain = 1e-7;    // smallest modularity gain that justifies a move
};

struct Partition {
    std::vector<std::string> ids;         // graph node order
    std::vector<std::size_t> community;   // dense ids 0..community_count-1
    double modularity = 0.0;
    std::size_t community_count = 0;

    std::size_t community_of(std::string_view id) const;
};

/// Multi-level Louvain. Community ids are numbered by first appearance in node order.
std::vector<std::size_t> louvain_assignment(const UndirectedGraph& graph, const LouvainConfig& config = {});

/// Louvain on the symmetrized narrator graph. Throws DomainError for edgeless graphs.
Partition louvain(const NarratorGraph& graph, const LouvainConfig& config = {});

}  // namespace isnad
