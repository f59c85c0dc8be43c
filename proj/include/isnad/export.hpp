#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isnad/centrality.hpp"
#include "isnad/community.hpp"
#include "isnad/graph.hpp"
#include "isnad/layout.hpp"

namespace isnad {

struct GexfAnnotations {
    std::vector<ScoreTable> scores;         // one node attribute per table, named by its measure
    std::optional<Partition> partition;     // "community" attribute plus viz:color
    std::optional<NodePositions> positions; // viz:position
};

/// GEXF 1.2 document: directed weighted edges, node attributes for generation,
/// era, city, every score table, and community; viz position/size/color when
/// the matching annotation is present. Size follows the first score table.
/// Throws ValidationError when an annotation does not cover exactly the graph's nodes.
std::string export_gexf(const NarratorGraph& graph, const GexfAnnotations& annotations = {});

/// Graphviz digraph with a `weight` attribute on every edge.
std::string export_dot(const NarratorGraph& graph);

/// `source,target,weight` CSV sorted by (source, target).
std::string export_edgelist(const NarratorGraph& graph);

}  // namespace isnad
