#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isnad/corpus_model.hpp"

namespace isnad {

/// How often an adjacent pair counts toward an edge weight.
/// Record: once per hadith record, however many of its chains contain the pair.
/// Chain: once per chain.
enum class PairDedup { Record, Chain };

PairDedup parse_pair_dedup(std::string_view text);
std::string_view to_string(PairDedup mode);

using NodeIndex = std::size_t;

struct Edge {
    NodeIndex source = 0;
    NodeIndex target = 0;
    std::int64_t weight = 0;

    bool operator==(const Edge&) const = default;
};

struct Neighbor {
    NodeIndex node = 0;
    std::int64_t weight = 0;
};

/// Edge-weighted "narrated to" digraph. Nodes are sorted by id and the position
/// in that order is the node's dense index. Edges are sorted by (source, target).
/// Immutable after construction.
class NarratorGraph {
public:
    NarratorGraph() = default;

    /// Validates the invariants: unique sorted ids, no self-loops, positive
    /// weights, endpoints in range, no parallel edges. Nodes and edges may be given unsorted.
    NarratorGraph(std::vector<Narrator> nodes, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return nodes_.empty(); }

    const std::vector<Narrator>& nodes() const noexcept { return nodes_; }
    const Narrator& node(NodeIndex index) const { return nodes_.at(index); }
    const std::string& id(NodeIndex index) const { return nodes_.at(index).id; }
    std::vector<std::string> ids() const;

    std::optional<NodeIndex> index_of(std::string_view id) const;
    /// Throws LookupError for unknown ids.
    NodeIndex require_index(std::string_view id) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Neighbor> out_neighbors(NodeIndex u) const;
    std::span<const Neighbor> in_neighbors(NodeIndex v) const;

    std::int64_t out_weight(NodeIndex u) const;
    std::int64_t in_weight(NodeIndex v) const;
    /// Zero when the edge is absent.
    std::int64_t weight(NodeIndex source, NodeIndex target) const;

private:
    std::vector<Narrator> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_;
    std::vector<Neighbor> out_;
    std::vector<std::size_t> in_offsets_;
    std::vector<Neighbor> in_;
};

/// Folds records into the graph. Every chain [n1..nk] contributes edges
/// n1->n2 ... n(k-1)->nk. The caller must pass only validated records; an id
/// missing from `table` raises InvariantError.
NarratorGraph build_graph(std::span<const HadithRecord> records, const NarratorTable& table,
                          PairDedup dedup = PairDedup::Record);

struct DegreeStats {
    std::int64_t indegree = 0;
    std::int64_t outdegree = 0;
    std::int64_t weighted_indegree = 0;
    std::int64_t weighted_outdegree = 0;

    bool operator==(const DegreeStats&) const = default;
};

DegreeStats degree_profile(const NarratorGraph& graph, std::string_view id);

/// Edges lying inside a strongly connected component of size > 1, sorted.
std::vector<Edge> cycle_edges(const NarratorGraph& graph);

struct CorpusCounts {
    std::size_t hadith_count = 0;
    std::size_t multi_chain_count = 0;
};

struct SummaryStats {
    std::size_t hadith_count = 0;
    std::size_t narrator_count = 0;
    std::size_t multi_chain_count = 0;
    std::size_t edge_count = 0;
    std::map<int, std::size_t> per_era_narrator_counts;
    std::size_t unknown_generation_count = 0;
    std::vector<std::pair<std::string, std::string>> cycle_edges;

    bool is_dag() const noexcept { return cycle_edges.empty(); }
};

SummaryStats corpus_summary(const NarratorGraph& graph, std::span<const HadithRecord> records,
                            const NarratorTable& table);
/// Same statistics when the records are no longer at hand (e.g. from a snapshot);
/// era counts come from the node metadata carried by the graph.
SummaryStats corpus_summary(const NarratorGraph& graph, const CorpusCounts& counts);

}  // namespace isnad
