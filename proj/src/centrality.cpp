#include "isnad/centrality.hpp"

#include <algorithm>
#include <cmath>

#include "isnad/errors.hpp"
#include "isnad/parallel.hpp"

namespace isnad {

namespace {

// Sources handled per parallel task. Fixed so that the reduction order, and
// therefore every bit of the result, is independent of the worker count.
constexpr std::size_t kSourcesPerChunk = 32;

ScoreTable make_table(const NarratorGraph& graph, std::string measure, std::vector<double> scores) {
    return ScoreTable{std::move(measure), graph.ids(), std::move(scores)};
}

void validate(const PageRankConfig& config) {
    if (!(config.damping > 0.0 && config.damping < 1.0)) {
        throw DomainError("damping must lie in (0, 1)");
    }
    if (!(config.tolerance > 0.0)) throw DomainError("tolerance must be positive");
    if (config.max_iterations < 0) throw DomainError("max_iterations must be >= 0");
}

// Dependency of every node on source s, Brandes style. Adds into `acc`.
void accumulate_source(const NarratorGraph& graph, NodeIndex s, std::vector<double>& acc,
                       std::vector<long>& dist, std::vector<double>& sigma, std::vector<double>& delta,
                       std::vector<NodeIndex>& order) {
    std::fill(dist.begin(), dist.end(), -1L);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const auto v = order[head];
        for (const auto& nb : graph.out_neighbors(v)) {
            const auto w = nb.node;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                order.push_back(w);
            }
            if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto w = *it;
        const double coeff = (1.0 + delta[w]) / sigma[w];
        for (const auto& nb : graph.in_neighbors(w)) {
            const auto v = nb.node;
            if (dist[v] >= 0 && dist[v] == dist[w] - 1) delta[v] += sigma[v] * coeff;
        }
        if (w != s) acc[w] += delta[w];
    }
}

}  // namespace

double ScoreTable::at(std::string_view id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) {
        throw LookupError("no " + measure + " score for '" + std::string(id) + "'");
    }
    return scores[static_cast<std::size_t>(it - ids.begin())];
}

PageRankResult pagerank(const NarratorGraph& graph, const PageRankConfig& config) {
    validate(config);
    if (graph.empty()) throw DomainError("pagerank needs a non-empty graph");

    const std::size_t n = graph.node_count();
    const double nd = static_cast<double>(n);
    const double d = config.damping;

    std::vector<double> out_total(n, 0.0);
    for (NodeIndex u = 0; u < n; ++u) {
        out_total[u] = config.use_edge_weights ? static_cast<double>(graph.out_weight(u))
                                               : static_cast<double>(graph.out_neighbors(u).size());
    }

    std::vector<double> rank(n, 1.0 / nd);
    std::vector<double> next(n, 0.0);
    PageRankResult result;
    for (int iter = 0; iter < config.max_iterations; ++iter) {
        double dangling = 0.0;
        for (NodeIndex u = 0; u < n; ++u) {
            if (out_total[u] == 0.0) dangling += rank[u];
        }
        const double base = (1.0 - d) / nd + d * dangling / nd;
        double change = 0.0;
        for (NodeIndex v = 0; v < n; ++v) {
            double inflow = 0.0;
            for (const auto& nb : graph.in_neighbors(v)) {
                const double w = config.use_edge_weights ? static_cast<double>(nb.weight) : 1.0;
                inflow += rank[nb.node] * w / out_total[nb.node];
            }
            next[v] = base + d * inflow;
            change += std::abs(next[v] - rank[v]);
        }
        rank.swap(next);
        result.iterations = iter + 1;
        result.last_change = change;
        if (change < config.tolerance) {
            result.converged = true;
            break;
        }
    }
    result.table = make_table(graph, "pagerank", std::move(rank));
    return result;
}

ScoreTable betweenness(const NarratorGraph& graph, const BetweennessConfig& config) {
    const std::size_t n = graph.node_count();
    const std::size_t chunks = (n + kSourcesPerChunk - 1) / kSourcesPerChunk;
    std::vector<std::vector<double>> partial(chunks);

    parallel_for(chunks, [&](std::size_t chunk) {
        std::vector<double> acc(n, 0.0);
        std::vector<long> dist(n);
        std::vector<double> sigma(n), delta(n);
        std::vector<NodeIndex> order;
        order.reserve(n);
        const std::size_t first = chunk * kSourcesPerChunk;
        const std::size_t last = std::min(n, first + kSourcesPerChunk);
        for (NodeIndex s = first; s < last; ++s) accumulate_source(graph, s, acc, dist, sigma, delta, order);
        partial[chunk] = std::move(acc);
    });

    std::vector<double> scores(n, 0.0);
    for (const auto& chunk : partial) {
        for (std::size_t v = 0; v < n; ++v) scores[v] += chunk[v];
    }
    if (config.normalized && n > 2) {
        const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
        for (auto& s : scores) s *= scale;
    }
    return make_table(graph, "betweenness", std::move(scores));
}

DegreeTables weighted_degree(const NarratorGraph& graph) {
    const std::size_t n = graph.node_count();
    std::vector<double> in(n), out(n), win(n), wout(n);
    for (NodeIndex v = 0; v < n; ++v) {
        in[v] = static_cast<double>(graph.in_neighbors(v).size());
        out[v] = static_cast<double>(graph.out_neighbors(v).size());
        win[v] = static_cast<double>(graph.in_weight(v));
        wout[v] = static_cast<double>(graph.out_weight(v));
    }
    return DegreeTables{
        make_table(graph, "indegree", std::move(in)),
        make_table(graph, "outdegree", std::move(out)),
        make_table(graph, "weighted-indegree", std::move(win)),
        make_table(graph, "weighted-outdegree", std::move(wout)),
    };
}

Measure parse_measure(std::string_view text) {
    if (text == "pagerank") return Measure::PageRank;
    if (text == "betweenness") return Measure::Betweenness;
    if (text == "indegree") return Measure::Indegree;
    if (text == "outdegree") return Measure::Outdegree;
    if (text == "weighted-indegree") return Measure::WeightedIndegree;
    if (text == "weighted-outdegree") return Measure::WeightedOutdegree;
    throw DomainError("unknown measure '" + std::string(text) + "'");
}

std::string_view to_string(Measure measure) {
    switch (measure) {
        case Measure::PageRank: return "pagerank";
        case Measure::Betweenness: return "betweenness";
        case Measure::Indegree: return "indegree";
        case Measure::Outdegree: return "outdegree";
        case Measure::WeightedIndegree: return "weighted-indegree";
        case Measure::WeightedOutdegree: return "weighted-outdegree";
    }
    return "unknown";
}

ScoreTable compute_centrality(const NarratorGraph& graph, Measure measure, const CentralityOptions& options) {
    switch (measure) {
        case Measure::PageRank: return pagerank(graph, options.pagerank).table;
        case Measure::Betweenness: return betweenness(graph, options.betweenness);
        case Measure::Indegree: return weighted_degree(graph).indegree;
        case Measure::Outdegree: return weighted_degree(graph).outdegree;
        case Measure::WeightedIndegree: return weighted_degree(graph).weighted_indegree;
        case Measure::WeightedOutdegree: return weighted_degree(graph).weighted_outdegree;
    }
    throw InvariantError("unhandled measure");
}

std::vector<RankedScore> top_k(const ScoreTable& scores, std::size_t k) {
    std::vector<std::size_t> order(scores.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores.scores[a] != scores.scores[b]) return scores.scores[a] > scores.scores[b];
        return scores.ids[a] < scores.ids[b];
    });
    order.resize(std::min(k, order.size()));
    std::vector<RankedScore> ranked;
    ranked.reserve(order.size());
    for (auto i : order) ranked.push_back({scores.ids[i], scores.scores[i]});
    return ranked;
}

}  // namespace isnad
