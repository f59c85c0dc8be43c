#include "isnad/export.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "isnad/csv.hpp"
#include "isnad/errors.hpp"
#include "isnad/format.hpp"

namespace isnad {

namespace {

struct Rgb {
    int r, g, b;
};

// Tableau-20, cycled by community id.
constexpr std::array<Rgb, 20> kPalette{{
    {31, 119, 180},  {174, 199, 232}, {255, 127, 14},  {255, 187, 120}, {44, 160, 44},
    {152, 223, 138}, {214, 39, 40},   {255, 152, 150}, {148, 103, 189}, {197, 176, 213},
    {140, 86, 75},   {196, 156, 148}, {227, 119, 194}, {247, 182, 210}, {127, 127, 127},
    {199, 199, 199}, {188, 189, 34},  {219, 219, 141}, {23, 190, 207},  {158, 218, 229},
}};

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

std::string dot_quote(std::string_view text) {
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        if (ch == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

void require_cover(const std::vector<std::string>& annotated, const NarratorGraph& graph, const std::string& what) {
    if (annotated.size() != graph.node_count()) {
        throw ValidationError(what + " covers " + std::to_string(annotated.size()) + " nodes, graph has " +
                              std::to_string(graph.node_count()));
    }
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        if (annotated[v] != graph.id(v)) {
            throw ValidationError(what + " does not match the graph's nodes (first mismatch at '" + graph.id(v) + "')");
        }
    }
}

}  // namespace

std::string export_gexf(const NarratorGraph& graph, const GexfAnnotations& annotations) {
    for (const auto& table : annotations.scores) {
        require_cover(table.ids, graph, "score table '" + table.measure + "'");
        if (table.scores.size() != table.ids.size()) throw ValidationError("score table '" + table.measure + "' is ragged");
    }
    if (annotations.partition) require_cover(annotations.partition->ids, graph, "partition");
    if (annotations.positions) require_cover(annotations.positions->ids, graph, "layout");

    const bool viz = annotations.positions || annotations.partition || !annotations.scores.empty();
    double max_score = 0.0;
    if (!annotations.scores.empty()) {
        for (const auto s : annotations.scores.front().scores) max_score = std::max(max_score, s);
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<gexf xmlns=\"http://www.gexf.net/1.2draft\"";
    if (viz) out << " xmlns:viz=\"http://www.gexf.net/1.2draft/viz\"";
    out << " version=\"1.2\">\n";
    out << "  <meta>\n    <creator>isnad</creator>\n    <description>narrator transmission network</description>\n  </meta>\n";
    out << "  <graph mode=\"static\" defaultedgetype=\"directed\">\n";
    out << "    <attributes class=\"node\" mode=\"static\">\n";
    out << "      <attribute id=\"generation\" title=\"generation\" type=\"integer\"/>\n";
    out << "      <attribute id=\"era\" title=\"era\" type=\"integer\"/>\n";
    out << "      <attribute id=\"city\" title=\"city\" type=\"string\"/>\n";
    for (const auto& table : annotations.scores) {
        out << "      <attribute id=\"" << xml_escape(table.measure) << "\" title=\"" << xml_escape(table.measure)
            << "\" type=\"double\"/>\n";
    }
    if (annotations.partition) {
        out << "      <attribute id=\"community\" title=\"community\" type=\"integer\"/>\n";
    }
    out << "    </attributes>\n";

    out << "    <nodes count=\"" << graph.node_count() << "\">\n";
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        const auto& node = graph.node(v);
        out << "      <node id=\"" << xml_escape(node.id) << "\" label=\""
            << xml_escape(node.name.empty() ? node.id : node.name) << "\">\n";
        out << "        <attvalues>\n";
        if (node.generation) {
            out << "          <attvalue for=\"generation\" value=\"" << *node.generation << "\"/>\n";
            out << "          <attvalue for=\"era\" value=\"" << *node.era() << "\"/>\n";
        }
        out << "          <attvalue for=\"city\" value=\"" << xml_escape(node.city) << "\"/>\n";
        for (const auto& table : annotations.scores) {
            out << "          <attvalue for=\"" << xml_escape(table.measure) << "\" value=\""
                << format_double(table.scores[v]) << "\"/>\n";
        }
        if (annotations.partition) {
            out << "          <attvalue for=\"community\" value=\"" << annotations.partition->community[v] << "\"/>\n";
        }
        out << "        </attvalues>\n";
        if (annotations.partition) {
            const auto& c = kPalette[annotations.partition->community[v] % kPalette.size()];
            out << "        <viz:color r=\"" << c.r << "\" g=\"" << c.g << "\" b=\"" << c.b << "\"/>\n";
        }
        if (annotations.positions) {
            const auto& p = annotations.positions->points[v];
            out << "        <viz:position x=\"" << format_double(p.x) << "\" y=\"" << format_double(p.y)
                << "\" z=\"0\"/>\n";
        }
        if (!annotations.scores.empty()) {
            const double s = annotations.scores.front().scores[v];
            const double size = max_score > 0.0 ? 1.0 + 19.0 * s / max_score : 1.0;
            out << "        <viz:size value=\"" << format_double(size) << "\"/>\n";
        }
        out << "      </node>\n";
    }
    out << "    </nodes>\n";

    out << "    <edges count=\"" << graph.edge_count() << "\">\n";
    std::size_t edge_id = 0;
    for (const auto& e : graph.edges()) {
        out << "      <edge id=\"" << edge_id++ << "\" source=\"" << xml_escape(graph.id(e.source)) << "\" target=\""
            << xml_escape(graph.id(e.target)) << "\" weight=\"" << e.weight << "\"/>\n";
    }
    out << "    </edges>\n";
    out << "  </graph>\n</gexf>\n";
    return out.str();
}

std::string export_dot(const NarratorGraph& graph) {
    std::ostringstream out;
    out << "digraph narrators {\n";
    for (const auto& node : graph.nodes()) {
        out << "  " << dot_quote(node.id) << " [label=" << dot_quote(node.name.empty() ? node.id : node.name) << "];\n";
    }
    for (const auto& e : graph.edges()) {
        out << "  " << dot_quote(graph.id(e.source)) << " -> " << dot_quote(graph.id(e.target)) << " [weight=" << e.weight
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_edgelist(const NarratorGraph& graph) {
    std::string out = "source,target,weight\n";
    for (const auto& e : graph.edges()) {
        out += csv::join({graph.id(e.source), graph.id(e.target), std::to_string(e.weight)});
        out.push_back('\n');
    }
    return out;
}

}  // namespace isnad
