#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isnad/graph.hpp"

namespace isnad {

/// Fruchterman-Reingold parameters. The frame is the square of the given area
/// centred on the origin; temperature cools linearly from 0.1*sqrt(area) to 0.
struct LayoutConfig {
    int iterations = 100;
    double area = 1.0;
    double spacing = 1.0;  // C in k = C * sqrt(area / N)
    std::uint64_t seed = 42;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

struct NodePositions {
    std::vector<std::string> ids;  // graph node order
    std::vector<Point> points;

    Point at(std::string_view id) const;
};

/// Ideal edge length k for a graph of `node_count` nodes.
double ideal_distance(const LayoutConfig& config, std::size_t node_count);

/// Exact O(N^2)-per-iteration force-directed placement on the undirected projection.
/// Attraction d^2/k along edges, repulsion k^2/d between every pair. Deterministic for a given seed.
/// Throws DomainError for an empty graph or invalid config.
NodePositions fr_layout(const NarratorGraph& graph, const LayoutConfig& config = {});

}  // namespace isnad
