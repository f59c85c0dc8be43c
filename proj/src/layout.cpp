#include "isnad/layout.hpp"

#include <algorithm>
#include <cmath>

#include "isnad/errors.hpp"
#include "isnad/parallel.hpp"
#include "isnad/random.hpp"

namespace isnad {

namespace {

constexpr double kMinDistance = 1e-9;
// Below this size the thread hand-off costs more than the repulsion pass.
constexpr std::size_t kParallelThreshold = 256;

}  // namespace

Point NodePositions::at(std::string_view id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) throw LookupError("no position for '" + std::string(id) + "'");
    return points[static_cast<std::size_t>(it - ids.begin())];
}

double ideal_distance(const LayoutConfig& config, std::size_t node_count) {
    return config.spacing * std::sqrt(config.area / static_cast<double>(std::max<std::size_t>(node_count, 1)));
}

NodePositions fr_layout(const NarratorGraph& graph, const LayoutConfig& config) {
    if (graph.empty()) throw DomainError("layout needs a non-empty graph");
    if (config.iterations < 0) throw DomainError("iterations must be >= 0");
    if (!(config.area > 0.0)) throw DomainError("area must be positive");
    if (!(config.spacing > 0.0)) throw DomainError("spacing constant must be positive");

    const std::size_t n = graph.node_count();
    const double side = std::sqrt(config.area);
    const double half = side / 2.0;
    const double k = ideal_distance(config, n);
    const double k2 = k * k;

    Rng rng(config.seed);
    std::vector<Point> pos(n);
    for (auto& p : pos) {
        p.x = (rng.unit() - 0.5) * side;
        p.y = (rng.unit() - 0.5) * side;
    }

    std::vector<std::vector<NodeIndex>> adj(n);
    for (const auto& e : graph.edges()) {
        adj[e.source].push_back(e.target);
        adj[e.target].push_back(e.source);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }

    std::vector<Point> disp(n);
    auto node_forces = [&](std::size_t v) {
        Point d{};
        for (std::size_t u = 0; u < n; ++u) {
            if (u == v) continue;
            double dx = pos[v].x - pos[u].x;
            double dy = pos[v].y - pos[u].y;
            double dist = std::hypot(dx, dy);
            if (dist < kMinDistance) {
                // coincident points: push apart along a direction fixed by the index pair
                const double angle = static_cast<double>(v * 7919 + u) * 0.7853981633974483;
                dx = std::cos(angle) * kMinDistance;
                dy = std::sin(angle) * kMinDistance;
                dist = kMinDistance;
            }
            const double repulse = k2 / dist;
            d.x += dx / dist * repulse;
            d.y += dy / dist * repulse;
        }
        for (const auto u : adj[v]) {
            const double dx = pos[v].x - pos[u].x;
            const double dy = pos[v].y - pos[u].y;
            const double dist = std::hypot(dx, dy);
            if (dist < kMinDistance) continue;
            const double attract = dist * dist / k;
            d.x -= dx / dist * attract;
            d.y -= dy / dist * attract;
        }
        disp[v] = d;
    };

    for (int iter = 0; iter < config.iterations; ++iter) {
        const double temperature =
            0.1 * side * (1.0 - static_cast<double>(iter) / static_cast<double>(config.iterations));
        if (n >= kParallelThreshold) {
            parallel_for(n, node_forces);
        } else {
            for (std::size_t v = 0; v < n; ++v) node_forces(v);
        }
        for (std::size_t v = 0; v < n; ++v) {
            const double len = std::hypot(disp[v].x, disp[v].y);
            if (len > 0.0 && std::isfinite(len)) {
                const double step = std::min(len, temperature);
                pos[v].x += disp[v].x / len * step;
                pos[v].y += disp[v].y / len * step;
            }
            pos[v].x = std::clamp(pos[v].x, -half, half);
            pos[v].y = std::clamp(pos[v].y, -half, half);
        }
    }

    return NodePositions{graph.ids(), std::move(pos)};
}

}  // namespace isnad
