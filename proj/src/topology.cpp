#include "isnad/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include "isnad/errors.hpp"
#include "isnad/parallel.hpp"

namespace isnad {

namespace {

constexpr double kMinAlpha = 1.0 + 1e-9;
constexpr double kMaxAlpha = 50.0;

// Simple undirected projection: sorted unique neighbors, no self-loops.
std::vector<std::vector<NodeIndex>> undirected_adjacency(const NarratorGraph& graph) {
    std::vector<std::vector<NodeIndex>> adj(graph.node_count());
    for (const auto& e : graph.edges()) {
        adj[e.source].push_back(e.target);
        adj[e.target].push_back(e.source);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

double hurwitz_zeta(double s, double q) {
    gsl_sf_result result;
    const int status = gsl_sf_hzeta_e(s, q, &result);
    if (status != GSL_SUCCESS) {
        throw DomainError(std::string("Hurwitz zeta failed: ") + gsl_strerror(status));
    }
    return result.val;
}

}  // namespace

Direction parse_direction(std::string_view text) {
    if (text == "in") return Direction::In;
    if (text == "out") return Direction::Out;
    if (text == "total") return Direction::Total;
    throw DomainError("unknown direction '" + std::string(text) + "' (expected in|out|total)");
}

std::string_view to_string(Direction direction) {
    switch (direction) {
        case Direction::In: return "in";
        case Direction::Out: return "out";
        case Direction::Total: return "total";
    }
    return "total";
}

std::vector<std::int64_t> degree_sequence(const NarratorGraph& graph, Direction direction) {
    std::vector<std::int64_t> degrees(graph.node_count(), 0);
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        const auto in = static_cast<std::int64_t>(graph.in_neighbors(v).size());
        const auto out = static_cast<std::int64_t>(graph.out_neighbors(v).size());
        degrees[v] = direction == Direction::In ? in : direction == Direction::Out ? out : in + out;
    }
    return degrees;
}

DegreeHistogram degree_distribution(const NarratorGraph& graph, Direction direction) {
    DegreeHistogram histogram;
    histogram.direction = direction;
    for (const auto k : degree_sequence(graph, direction)) ++histogram.buckets[k];
    return histogram;
}

PowerLawMethod parse_power_law_method(std::string_view text) {
    if (text == "exact") return PowerLawMethod::ExactDiscrete;
    if (text == "approx") return PowerLawMethod::ShiftedApprox;
    throw DomainError("unknown power-law method '" + std::string(text) + "' (expected exact|approx)");
}

std::string_view to_string(PowerLawMethod method) {
    return method == PowerLawMethod::ExactDiscrete ? "exact" : "approx";
}

PowerLawFit fit_power_law(std::span<const std::int64_t> samples, std::int64_t xmin, PowerLawMethod method) {
    if (xmin < 1) throw DomainError("xmin must be >= 1");
    std::size_t n_tail = 0;
    double log_sum = 0.0;
    double shifted_log_sum = 0.0;
    bool all_at_xmin = true;
    const double shift = static_cast<double>(xmin) - 0.5;
    for (const auto x : samples) {
        if (x < xmin) continue;
        ++n_tail;
        log_sum += std::log(static_cast<double>(x));
        shifted_log_sum += std::log(static_cast<double>(x) / shift);
        all_at_xmin = all_at_xmin && x == xmin;
    }
    if (n_tail < 2) {
        throw DomainError("power-law fit needs at least 2 samples >= xmin, found " + std::to_string(n_tail));
    }

    PowerLawFit fit;
    fit.xmin = xmin;
    fit.n_tail = n_tail;
    fit.method = method;
    const double n = static_cast<double>(n_tail);
    if (method == PowerLawMethod::ShiftedApprox) {
        fit.alpha = 1.0 + n / shifted_log_sum;
        return fit;
    }

    if (all_at_xmin) {
        throw DomainError("every tail sample equals xmin; the discrete likelihood increases without bound");
    }
    gsl_set_error_handler_off();
    const double q = static_cast<double>(xmin);
    auto negative_log_likelihood = [&](double alpha) { return n * std::log(hurwitz_zeta(alpha, q)) + alpha * log_sum; };
    const int bits = std::numeric_limits<double>::digits / 2;
    const auto [alpha, value] = boost::math::tools::brent_find_minima(negative_log_likelihood, kMinAlpha, kMaxAlpha, bits);
    (void)value;
    fit.alpha = alpha;
    return fit;
}

double global_clustering(const NarratorGraph& graph) {
    const std::size_t n = graph.node_count();
    if (n == 0) return 0.0;
    const auto adj = undirected_adjacency(graph);
    double total = 0.0;
    for (NodeIndex v = 0; v < n; ++v) {
        const auto& nbrs = adj[v];
        const std::size_t k = nbrs.size();
        if (k < 2) continue;
        std::size_t links = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const auto& other = adj[nbrs[i]];
            // count neighbors of v adjacent to nbrs[i] with larger index, so each link counts once
            for (std::size_t j = i + 1; j < k; ++j) {
                if (std::binary_search(other.begin(), other.end(), nbrs[j])) ++links;
            }
        }
        total += static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
    }
    return total / static_cast<double>(n);
}

std::vector<NodeIndex> largest_component(const NarratorGraph& graph) {
    const std::size_t n = graph.node_count();
    const auto adj = undirected_adjacency(graph);
    constexpr auto kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> component(n, kNone);
    std::vector<NodeIndex> best;
    std::vector<NodeIndex> members;
    for (NodeIndex root = 0; root < n; ++root) {
        if (component[root] != kNone) continue;
        members.clear();
        members.push_back(root);
        component[root] = root;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (const auto w : adj[members[head]]) {
                if (component[w] == kNone) {
                    component[w] = root;
                    members.push_back(w);
                }
            }
        }
        if (members.size() > best.size()) best = members;
    }
    std::sort(best.begin(), best.end());
    return best;
}

double avg_path_length(const NarratorGraph& graph) {
    const auto members = largest_component(graph);
    if (members.size() < 2) {
        throw DomainError("average path length needs a connected component of at least 2 nodes");
    }
    const auto adj = undirected_adjacency(graph);
    const std::size_t n = graph.node_count();

    std::vector<std::uint64_t> distance_sums(members.size(), 0);
    parallel_for(members.size(), [&](std::size_t i) {
        std::vector<long> dist(n, -1);
        std::vector<NodeIndex> queue{members[i]};
        dist[members[i]] = 0;
        std::uint64_t sum = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto v = queue[head];
            sum += static_cast<std::uint64_t>(dist[v]);
            for (const auto w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        distance_sums[i] = sum;
    });

    std::uint64_t total = 0;
    for (const auto s : distance_sums) total += s;
    const double pairs = static_cast<double>(members.size()) * static_cast<double>(members.size() - 1);
    return static_cast<double>(total) / pairs;
}

}  // namespace isnad
