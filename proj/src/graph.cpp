#include "isnad/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "isnad/errors.hpp"

namespace isnad {

PairDedup parse_pair_dedup(std::string_view text) {
    if (text == "record") return PairDedup::Record;
    if (text == "chain") return PairDedup::Chain;
    throw DomainError("unknown pair-dedup mode '" + std::string(text) + "' (expected record|chain)");
}

std::string_view to_string(PairDedup mode) {
    return mode == PairDedup::Record ? "record" : "chain";
}

NarratorGraph::NarratorGraph(std::vector<Narrator> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    std::sort(nodes_.begin(), nodes_.end(), [](const Narrator& a, const Narrator& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id.empty()) throw InvariantError("graph node with empty id");
        if (i > 0 && nodes_[i - 1].id == nodes_[i].id) {
            throw InvariantError("duplicate graph node '" + nodes_[i].id + "'");
        }
    }

    const std::size_t n = nodes_.size();
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.source >= n || e.target >= n) throw InvariantError("edge endpoint out of range");
        if (e.source == e.target) throw InvariantError("self-loop on '" + nodes_[e.source].id + "'");
        if (e.weight < 1) throw InvariantError("edge weight must be >= 1");
        if (i > 0 && edges_[i - 1].source == e.source && edges_[i - 1].target == e.target) {
            throw InvariantError("parallel edge " + nodes_[e.source].id + "->" + nodes_[e.target].id);
        }
    }

    out_offsets_.assign(n + 1, 0);
    in_offsets_.assign(n + 1, 0);
    for (const auto& e : edges_) {
        ++out_offsets_[e.source + 1];
        ++in_offsets_[e.target + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        out_offsets_[i + 1] += out_offsets_[i];
        in_offsets_[i + 1] += in_offsets_[i];
    }
    out_.resize(edges_.size());
    in_.resize(edges_.size());
    auto out_fill = out_offsets_;
    auto in_fill = in_offsets_;
    // edges_ is sorted by (source, target), so both adjacency lists come out sorted by neighbor.
    for (const auto& e : edges_) {
        out_[out_fill[e.source]++] = {e.target, e.weight};
    }
    std::vector<Edge> by_target(edges_);
    std::sort(by_target.begin(), by_target.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.target, a.source) < std::tie(b.target, b.source);
    });
    for (const auto& e : by_target) {
        in_[in_fill[e.target]++] = {e.source, e.weight};
    }
}

std::vector<std::string> NarratorGraph::ids() const {
    std::vector<std::string> out;
    out.reserve(nodes_.size());
    for (const auto& n : nodes_) out.push_back(n.id);
    return out;
}

std::optional<NodeIndex> NarratorGraph::index_of(std::string_view id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                               [](const Narrator& n, std::string_view key) { return n.id < key; });
    if (it == nodes_.end() || it->id != id) return std::nullopt;
    return static_cast<NodeIndex>(it - nodes_.begin());
}

NodeIndex NarratorGraph::require_index(std::string_view id) const {
    if (auto index = index_of(id)) return *index;
    throw LookupError("narrator '" + std::string(id) + "' is not in the graph");
}

std::span<const Neighbor> NarratorGraph::out_neighbors(NodeIndex u) const {
    return std::span<const Neighbor>(out_).subspan(out_offsets_.at(u), out_offsets_.at(u + 1) - out_offsets_[u]);
}

std::span<const Neighbor> NarratorGraph::in_neighbors(NodeIndex v) const {
    return std::span<const Neighbor>(in_).subspan(in_offsets_.at(v), in_offsets_.at(v + 1) - in_offsets_[v]);
}

std::int64_t NarratorGraph::out_weight(NodeIndex u) const {
    std::int64_t total = 0;
    for (const auto& nb : out_neighbors(u)) total += nb.weight;
    return total;
}

std::int64_t NarratorGraph::in_weight(NodeIndex v) const {
    std::int64_t total = 0;
    for (const auto& nb : in_neighbors(v)) total += nb.weight;
    return total;
}

std::int64_t NarratorGraph::weight(NodeIndex source, NodeIndex target) const {
    auto row = out_neighbors(source);
    auto it = std::lower_bound(row.begin(), row.end(), target,
                               [](const Neighbor& nb, NodeIndex key) { return nb.node < key; });
    return (it != row.end() && it->node == target) ? it->weight : 0;
}

NarratorGraph build_graph(std::span<const HadithRecord> records, const NarratorTable& table, PairDedup dedup) {
    std::set<std::string, std::less<>> node_ids;
    for (const auto& record : records) {
        for (const auto& chain : record.chains) {
            for (const auto& id : chain.narrators) {
                if (!table.contains(id)) {
                    throw InvariantError("record " + record.key() + " reached graph building with unknown id '" +
                                         id + "'");
                }
                node_ids.insert(id);
            }
        }
    }

    std::vector<Narrator> nodes;
    nodes.reserve(node_ids.size());
    for (const auto& id : node_ids) nodes.push_back(table.at(id));
    std::vector<std::string> sorted_ids(node_ids.begin(), node_ids.end());
    auto lookup = [&](const std::string& id) {
        return static_cast<NodeIndex>(std::lower_bound(sorted_ids.begin(), sorted_ids.end(), id) - sorted_ids.begin());
    };

    std::map<std::pair<NodeIndex, NodeIndex>, std::int64_t> weights;
    for (const auto& record : records) {
        std::set<std::pair<NodeIndex, NodeIndex>> record_pairs;
        for (const auto& chain : record.chains) {
            std::set<std::pair<NodeIndex, NodeIndex>> chain_pairs;
            for (std::size_t i = 0; i + 1 < chain.narrators.size(); ++i) {
                const auto s = lookup(chain.narrators[i]);
                const auto t = lookup(chain.narrators[i + 1]);
                if (s == t) {
                    throw InvariantError("record " + record.key() + " has a self-transmission of '" +
                                         chain.narrators[i] + "'");
                }
                chain_pairs.emplace(s, t);
            }
            if (dedup == PairDedup::Chain) {
                for (const auto& p : chain_pairs) ++weights[p];
            } else {
                record_pairs.insert(chain_pairs.begin(), chain_pairs.end());
            }
        }
        for (const auto& p : record_pairs) ++weights[p];
    }

    std::vector<Edge> edges;
    edges.reserve(weights.size());
    for (const auto& [pair, w] : weights) edges.push_back({pair.first, pair.second, w});
    return NarratorGraph(std::move(nodes), std::move(edges));
}

DegreeStats degree_profile(const NarratorGraph& graph, std::string_view id) {
    const auto v = graph.require_index(id);
    DegreeStats stats;
    stats.indegree = static_cast<std::int64_t>(graph.in_neighbors(v).size());
    stats.outdegree = static_cast<std::int64_t>(graph.out_neighbors(v).size());
    stats.weighted_indegree = graph.in_weight(v);
    stats.weighted_outdegree = graph.out_weight(v);
    return stats;
}

std::vector<Edge> cycle_edges(const NarratorGraph& graph) {
    // Iterative Tarjan.
    const std::size_t n = graph.node_count();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, kUnvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeIndex> stack;
    std::vector<std::size_t> component_size;
    std::size_t counter = 0;

    struct Frame {
        NodeIndex node;
        std::size_t next_edge;
    };
    for (NodeIndex root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& frame = call.back();
            const auto v = frame.node;
            auto out = graph.out_neighbors(v);
            if (frame.next_edge < out.size()) {
                const auto w = out[frame.next_edge++].node;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                const std::size_t c = component_size.size();
                std::size_t size = 0;
                NodeIndex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = c;
                    ++size;
                } while (w != v);
                component_size.push_back(size);
            }
            call.pop_back();
            if (!call.empty()) {
                const auto parent = call.back().node;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    std::vector<Edge> result;
    for (const auto& e : graph.edges()) {
        if (component[e.source] == component[e.target] && component_size[component[e.source]] > 1) {
            result.push_back(e);
        }
    }
    return result;
}

namespace {

SummaryStats summarize(const NarratorGraph& graph, const CorpusCounts& counts,
                       const std::function<std::optional<int>(const Narrator&)>& era_of) {
    SummaryStats stats;
    stats.hadith_count = counts.hadith_count;
    stats.multi_chain_count = counts.multi_chain_count;
    stats.narrator_count = graph.node_count();
    stats.edge_count = graph.edge_count();
    for (const auto& node : graph.nodes()) {
        if (auto era = era_of(node)) {
            ++stats.per_era_narrator_counts[*era];
        } else {
            ++stats.unknown_generation_count;
        }
    }
    for (const auto& e : cycle_edges(graph)) {
        stats.cycle_edges.emplace_back(graph.id(e.source), graph.id(e.target));
    }
    return stats;
}

}  // namespace

SummaryStats corpus_summary(const NarratorGraph& graph, std::span<const HadithRecord> records,
                            const NarratorTable& table) {
    CorpusCounts counts;
    counts.hadith_count = records.size();
    counts.multi_chain_count = static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const HadithRecord& r) { return r.chains.size() >= 2; }));
    return summarize(graph, counts, [&](const Narrator& node) -> std::optional<int> {
        if (const auto* known = table.find(node.id)) return known->era();
        return node.era();
    });
}

SummaryStats corpus_summary(const NarratorGraph& graph, const CorpusCounts& counts) {
    return summarize(graph, counts, [](const Narrator& node) { return node.era(); });
}

}  // namespace isnad
