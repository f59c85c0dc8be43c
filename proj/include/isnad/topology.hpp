#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "isnad/graph.hpp"

namespace isnad {

enum class Direction { In, Out, Total };

Direction parse_direction(std::string_view text);
std::string_view to_string(Direction direction);

struct DegreeHistogram {
    Direction direction = Direction::Total;
    std::map<std::int64_t, std::int64_t> buckets;  // degree -> node count
};

/// Unweighted degree per node, in node order. Total = in + out.
std::vector<std::int64_t> degree_sequence(const NarratorGraph& graph, Direction direction);

DegreeHistogram degree_distribution(const NarratorGraph& graph, Direction direction);

enum class PowerLawMethod {
    /// Maximizes the exact discrete likelihood -n ln zeta(alpha, xmin) - alpha sum ln x.
    ExactDiscrete,
    /// Closed form alpha = 1 + n / sum ln(x / (xmin - 1/2)). Biased low for small xmin.
    ShiftedApprox,
};

PowerLawMethod parse_power_law_method(std::string_view text);
std::string_view to_string(PowerLawMethod method);

struct PowerLawFit {
    double alpha = 0.0;
    std::int64_t xmin = 1;
    std::size_t n_tail = 0;  // samples >= xmin
    PowerLawMethod method = PowerLawMethod::ExactDiscrete;
};

/// Fits the exponent to the samples >= xmin. Samples below xmin are ignored.
/// Throws DomainError when xmin < 1, when fewer than two samples reach xmin, or
/// (exact method only) when every tail sample equals xmin, where the likelihood has no maximum.
PowerLawFit fit_power_law(std::span<const std::int64_t> samples, std::int64_t xmin,
                          PowerLawMethod method = PowerLawMethod::ExactDiscrete);

/// Mean local clustering coefficient on the simple undirected projection.
/// Nodes of degree < 2 contribute 0 and stay in the denominator. 0 for an empty graph.
double global_clustering(const NarratorGraph& graph);

/// Nodes of the largest weakly connected component (ties: the one holding the smallest node index), sorted.
std::vector<NodeIndex> largest_component(const NarratorGraph& graph);

/// Mean hop distance over ordered node pairs of the largest weakly connected
/// component, measured on the undirected projection. Throws DomainError when that component has < 2 nodes.
double avg_path_length(const NarratorGraph& graph);

}  // namespace isnad
