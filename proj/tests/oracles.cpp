#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <set>
#include <tuple>

namespace oracle {

std::string node_id(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "n%03zu", i);
    return buf;
}

NarratorGraph make_graph(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& edges) {
    std::vector<isnad::Narrator> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back({node_id(i), "N" + std::to_string(i), std::nullopt, ""});
    std::vector<isnad::Edge> list;
    for (const auto& [s, t, w] : edges) list.push_back({s, t, w});
    return NarratorGraph(std::move(nodes), std::move(list));
}

NarratorGraph random_digraph(isnad::Rng& rng, std::size_t n, double p, std::int64_t max_weight) {
    std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && rng.unit() < p) w[u][v] = 1 + static_cast<std::int64_t>(rng.below(max_weight));
        }
    }
    if (n >= 2) {
        // a guaranteed 2-cycle
        const auto a = rng.below(n);
        auto b = rng.below(n - 1);
        if (b >= a) ++b;
        w[a][b] = std::max<std::int64_t>(w[a][b], 1);
        w[b][a] = std::max<std::int64_t>(w[b][a], 1);
        // and a guaranteed sink, unless that would break the 2-cycle
        const auto sink = rng.below(n);
        if (sink != a && sink != b) std::fill(w[sink].begin(), w[sink].end(), 0);
    }
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (w[u][v] > 0) edges.emplace_back(u, v, w[u][v]);
    return make_graph(n, edges);
}

std::vector<double> dense_pagerank(const NarratorGraph& graph, double damping, bool weighted) {
    const std::size_t n = graph.node_count();
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (const auto& e : graph.edges()) w[e.source][e.target] = weighted ? static_cast<double>(e.weight) : 1.0;
    // G[v][u]: probability of stepping u -> v
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
        double out = 0.0;
        for (std::size_t v = 0; v < n; ++v) out += w[u][v];
        for (std::size_t v = 0; v < n; ++v) {
            const double step = out > 0.0 ? w[u][v] / out : 1.0 / static_cast<double>(n);
            g[v][u] = damping * step + (1.0 - damping) / static_cast<double>(n);
        }
    }
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    for (int iter = 0; iter < 100000; ++iter) {
        std::vector<double> y(n, 0.0);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) y[v] += g[v][u] * x[u];
        double change = 0.0;
        for (std::size_t v = 0; v < n; ++v) change = std::max(change, std::abs(y[v] - x[v]));
        x = std::move(y);
        if (change < 1e-16) break;
    }
    return x;
}

std::vector<double> enumerated_betweenness(const NarratorGraph& graph) {
    const std::size_t n = graph.node_count();
    constexpr int kInf = std::numeric_limits<int>::max() / 4;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& e : graph.edges()) d[e.source][e.target] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : graph.edges()) adj[e.source][e.target] = true;

    std::vector<double> score(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            if (s == t || d[s][t] >= kInf) continue;
            // every walk of length d[s][t] from s to t is a shortest path
            std::vector<std::vector<std::size_t>> paths;
            std::vector<std::size_t> path{s};
            std::function<void(std::size_t)> walk = [&](std::size_t u) {
                if (u == t) {
                    paths.push_back(path);
                    return;
                }
                if (static_cast<int>(path.size()) - 1 >= d[s][t]) return;
                for (std::size_t v = 0; v < n; ++v) {
                    if (adj[u][v]) {
                        path.push_back(v);
                        walk(v);
                        path.pop_back();
                    }
                }
            };
            walk(s);
            std::vector<double> through(n, 0.0);
            for (const auto& p : paths)
                for (std::size_t i = 1; i + 1 < p.size(); ++i) through[p[i]] += 1.0;
            for (std::size_t v = 0; v < n; ++v) score[v] += through[v] / static_cast<double>(paths.size());
        }
    }
    return score;
}

namespace {

std::vector<std::vector<double>> dense(const UndirectedGraph& graph) {
    const std::size_t n = graph.node_count();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u)
        for (const auto& link : graph.neighbors(u)) a[u][link.node] = link.node == u ? 2.0 * link.weight : link.weight;
    return a;
}

double pairwise(const std::vector<std::vector<double>>& a, const std::vector<std::size_t>& c, double gamma) {
    const std::size_t n = a.size();
    std::vector<double> k(n, 0.0);
    double two_m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) k[i] += a[i][j];
        two_m += k[i];
    }
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c[i] == c[j]) q += a[i][j] - gamma * k[i] * k[j] / two_m;
    return q / two_m;
}

}  // namespace

double pairwise_modularity(const UndirectedGraph& graph, const std::vector<std::size_t>& assignment, double gamma) {
    return pairwise(dense(graph), assignment, gamma);
}

double best_modularity(const UndirectedGraph& graph) {
    const auto a = dense(graph);
    const std::size_t n = a.size();
    std::vector<std::size_t> c(n, 0);
    double best = -std::numeric_limits<double>::infinity();
    // restricted growth strings enumerate each set partition once
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            best = std::max(best, pairwise(a, c, 1.0));
            return;
        }
        for (std::size_t label = 0; label <= used && label < n; ++label) {
            c[i] = label;
            rec(i + 1, std::max(used, label + 1));
        }
    };
    rec(0, 0);
    return best;
}

double best_single_move_gain(const UndirectedGraph& graph, const std::vector<std::size_t>& assignment) {
    const auto a = dense(graph);
    const std::size_t n = a.size();
    const double base = pairwise(a, assignment, 1.0);
    const std::size_t fresh = *std::max_element(assignment.begin(), assignment.end()) + 1;
    double best = -std::numeric_limits<double>::infinity();
    auto moved = assignment;
    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::size_t> targets{fresh};
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j] > 0.0 && j != i) targets.insert(assignment[j]);
        for (const auto c : targets) {
            if (c == assignment[i]) continue;
            moved[i] = c;
            best = std::max(best, pairwise(a, moved, 1.0) - base);
        }
        moved[i] = assignment[i];
    }
    return best;
}

namespace {

std::vector<std::vector<bool>> undirected_matrix(const NarratorGraph& graph) {
    const std::size_t n = graph.node_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : graph.edges()) adj[e.source][e.target] = adj[e.target][e.source] = true;
    return adj;
}

}  // namespace

double floyd_avg_path_length(const NarratorGraph& graph) {
    const std::size_t n = graph.node_count();
    const auto adj = undirected_matrix(graph);
    constexpr long kInf = std::numeric_limits<long>::max() / 4;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, kInf));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = i == j ? 0 : (adj[i][j] ? 1 : kInf);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    // largest component, ties to the one holding the lowest index
    std::size_t best_root = 0, best_size = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t size = 0;
        bool root = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (d[i][j] < kInf) {
                ++size;
                if (j < i) root = false;
            }
        }
        if (root && size > best_size) {
            best_size = size;
            best_root = i;
        }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[best_root][i] >= kInf) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && d[best_root][j] < kInf) total += static_cast<double>(d[i][j]);
    }
    return total / static_cast<double>(best_size * (best_size - 1));
}

double matrix_clustering(const NarratorGraph& graph) {
    const std::size_t n = graph.node_count();
    if (n == 0) return 0.0;
    const auto adj = undirected_matrix(graph);
    double sum = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> nb;
        for (std::size_t u = 0; u < n; ++u)
            if (adj[v][u]) nb.push_back(u);
        if (nb.size() < 2) continue;
        double links = 0.0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (adj[nb[i]][nb[j]]) links += 1.0;
        sum += 2.0 * links / static_cast<double>(nb.size() * (nb.size() - 1));
    }
    return sum / static_cast<double>(n);
}

std::int64_t zipf_draw(isnad::Rng& rng, double alpha) {
    const double b = std::pow(2.0, alpha - 1.0);
    for (;;) {
        const double u = 1.0 - rng.unit();  // (0, 1]
        const double v = rng.unit();
        const double x = std::floor(std::pow(u, -1.0 / (alpha - 1.0)));
        if (x > 9.0e18) continue;
        const double t = std::pow(1.0 + 1.0 / x, alpha - 1.0);
        if (v * x * (t - 1.0) / (b - 1.0) <= t / b) return static_cast<std::int64_t>(x);
    }
}

}  // namespace oracle
