#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "isnad/graph.hpp"

namespace isnad {

/// Per-node scores aligned with the graph's node order (ids ascending).
struct ScoreTable {
    std::string measure;
    std::vector<std::string> ids;
    std::vector<double> scores;

    std::size_t size() const noexcept { return ids.size(); }
    /// Throws LookupError for ids absent from the table.
    double at(std::string_view id) const;

    bool operator==(const ScoreTable&) const = default;
};

struct PageRankConfig {
    double damping = 0.85;
    double tolerance = 1e-9;  // stop once the L1 change of one iteration drops below this
    int max_iterations = 200;
    bool use_edge_weights = true;
};

struct PageRankResult {
    ScoreTable table;
    bool converged = false;
    int iterations = 0;
    double last_change = 0.0;  // L1 change of the final iteration
};

/// Power iteration with uniform teleport and uniform redistribution of dangling mass:
///   PR(v) = (1-d)/N + d * (sum_{u->v} PR(u) w(u,v) / W_out(u) + D/N)
/// Throws DomainError on an empty graph or an invalid config. Non-convergence is
/// reported through PageRankResult::converged rather than thrown.
PageRankResult pagerank(const NarratorGraph& graph, const PageRankConfig& config = {});

struct BetweennessConfig {
    bool normalized = false;  // divide by (N-1)(N-2)
};

/// Brandes betweenness over directed, unweighted shortest paths.
ScoreTable betweenness(const NarratorGraph& graph, const BetweennessConfig& config = {});

struct DegreeTables {
    ScoreTable indegree;
    ScoreTable outdegree;
    ScoreTable weighted_indegree;
    ScoreTable weighted_outdegree;
};

DegreeTables weighted_degree(const NarratorGraph& graph);

enum class Measure { PageRank, Betweenness, Indegree, Outdegree, WeightedIndegree, WeightedOutdegree };

Measure parse_measure(std::string_view text);
std::string_view to_string(Measure measure);

struct CentralityOptions {
    PageRankConfig pagerank;
    BetweennessConfig betweenness;
};

/// Dispatches to the measure's algorithm; the table's `measure` is the CLI name of the measure.
ScoreTable compute_centrality(const NarratorGraph& graph, Measure measure, const CentralityOptions& options = {});

struct RankedScore {
    std::string id;
    double score = 0.0;

    bool operator==(const RankedScore&) const = default;
};

/// Highest scores first; equal scores ordered by ascending id. k beyond the table size returns everything.
std::vector<RankedScore> top_k(const ScoreTable& scores, std::size_t k);

}  // namespace isnad
