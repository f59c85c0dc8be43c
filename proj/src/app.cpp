#include "isnad/app.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "isnad/centrality.hpp"
#include "isnad/community.hpp"
#include "isnad/csv.hpp"
#include "isnad/era_locality.hpp"
#include "isnad/errors.hpp"
#include "isnad/export.hpp"
#include "isnad/format.hpp"
#include "isnad/ingest.hpp"
#include "isnad/layout.hpp"
#include "isnad/snapshot.hpp"
#include "isnad/topology.hpp"

namespace isnad {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "usage"; }
};

// ---------------------------------------------------------------------------
// tabular rendering

enum class TableFormat { Csv, Tsv, Markdown };

TableFormat parse_table_format(const std::string& text) {
    if (text == "csv") return TableFormat::Csv;
    if (text == "tsv") return TableFormat::Tsv;
    if (text == "md") return TableFormat::Markdown;
    throw UsageError("unknown format '" + text + "'");
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render(TableFormat format) const {
        std::string out;
        if (format == TableFormat::Markdown) {
            auto line = [&](const std::vector<std::string>& cells) {
                out += "|";
                for (const auto& c : cells) {
                    std::string cell = c;
                    for (std::size_t p = 0; (p = cell.find('|', p)) != std::string::npos; p += 2) cell.replace(p, 1, "\\|");
                    out += " " + cell + " |";
                }
                out += "\n";
            };
            line(header);
            out += "|";
            for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
            out += "\n";
            for (const auto& row : rows) line(row);
            return out;
        }
        const char delim = format == TableFormat::Tsv ? '\t' : ',';
        out += csv::join(header, delim) + "\n";
        for (const auto& row : rows) out += csv::join(row, delim) + "\n";
        return out;
    }
};

// ---------------------------------------------------------------------------
// inputs

struct InputOptions {
    std::string snapshot;
    std::string narrators;
    std::string hadith;
    std::string chain_order = "compiler-first";
    std::string pair_dedup = "record";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("-s,--snapshot", in.snapshot, "Graph snapshot written by 'ingest'");
    cmd->add_option("--narrators", in.narrators, "Narrator CSV (id,name,generation,city)");
    cmd->add_option("--hadith", in.hadith, "Hadith records, one JSON object per line");
    cmd->add_option("--chain-order", in.chain_order, "Chain listing order in the hadith file")
        ->check(CLI::IsMember({"source-first", "compiler-first"}));
    cmd->add_option("--pair-dedup", in.pair_dedup, "Count an adjacent pair once per record or per chain")
        ->check(CLI::IsMember({"record", "chain"}));
}

Snapshot ingest_corpus(const InputOptions& in) {
    const auto table = parse_narrators(in.narrators);
    const auto records = parse_hadith_records(in.hadith, parse_chain_order(in.chain_order));
    return make_snapshot(records, table, parse_pair_dedup(in.pair_dedup));
}

Snapshot load_inputs(const InputOptions& in) {
    if (!in.snapshot.empty()) {
        if (!in.narrators.empty() || !in.hadith.empty()) {
            throw UsageError("give either --snapshot or --narrators/--hadith, not both");
        }
        return load_snapshot(in.snapshot);
    }
    if (in.narrators.empty() || in.hadith.empty()) {
        throw UsageError("an input is required: --snapshot PATH, or --narrators PATH --hadith PATH");
    }
    return ingest_corpus(in);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write '" + path + "'");
    file << text;
    if (!file) throw Error("failed writing '" + path + "'");
}

void warn_defects(const ValidationReport& report, std::ostream& err) {
    for (const auto& line : report.describe()) err << "warning: " << line << " (record excluded)\n";
}

// ---------------------------------------------------------------------------
// renderers shared by the individual subcommands and by `report`

std::string render_stats(const Snapshot& snap, TableFormat format) {
    const auto stats = corpus_summary(snap.graph, snap.counts);
    Table t{{"metric", "value"}, {}};
    auto row = [&](std::string key, std::string value) { t.rows.push_back({std::move(key), std::move(value)}); };
    row("record_count", std::to_string(snap.report.record_count));
    row("hadith_count", std::to_string(stats.hadith_count));
    row("excluded_records", std::to_string(snap.report.record_count - stats.hadith_count));
    row("narrator_count", std::to_string(stats.narrator_count));
    row("edge_count", std::to_string(stats.edge_count));
    row("multi_chain_count", std::to_string(stats.multi_chain_count));
    const double fraction = stats.hadith_count == 0
                                ? 0.0
                                : 100.0 * static_cast<double>(stats.multi_chain_count) / static_cast<double>(stats.hadith_count);
    row("multi_chain_percent", format_fixed(fraction, 2));
    for (int era = 1; era <= kEraCount; ++era) {
        auto it = stats.per_era_narrator_counts.find(era);
        row("era" + std::to_string(era) + "_narrators",
            std::to_string(it == stats.per_era_narrator_counts.end() ? 0 : it->second));
    }
    row("unknown_generation", std::to_string(stats.unknown_generation_count));
    row("unknown_narrator_refs", std::to_string(snap.report.unknown_narrator_refs.size()));
    row("duplicate_records", std::to_string(snap.report.duplicate_records.size()));
    row("intra_chain_repeats", std::to_string(snap.report.intra_chain_repeats.size()));
    row("pair_dedup", std::string(to_string(snap.dedup)));
    row("is_dag", stats.is_dag() ? "true" : "false");
    row("cycle_edge_count", std::to_string(stats.cycle_edges.size()));
    for (const auto& [s, t2] : stats.cycle_edges) row("cycle_edge", s + "->" + t2);
    return t.render(format);
}

std::string render_ranking(const NarratorGraph& graph, const ScoreTable& scores, std::size_t top, TableFormat format) {
    Table t{{"rank", "id", "name", "score"}, {}};
    std::size_t rank = 0;
    for (const auto& item : top_k(scores, top)) {
        t.rows.push_back({std::to_string(++rank), item.id, graph.node(graph.require_index(item.id)).name,
                          format_double(item.score)});
    }
    return t.render(format);
}

std::string community_summary(const Partition& partition) {
    return "# community_count=" + std::to_string(partition.community_count) +
           " modularity=" + format_fixed(partition.modularity, 6) + "\n";
}

std::string render_communities(const NarratorGraph& graph, const Partition& partition, TableFormat format) {
    Table t{{"id", "name", "community"}, {}};
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        t.rows.push_back({graph.id(v), graph.node(v).name, std::to_string(partition.community[v])});
    }
    return t.render(format) + community_summary(partition);
}

std::string render_era_table(const EraCityTable& table, TableFormat format) {
    const bool md = format == TableFormat::Markdown;
    Table t;
    t.header = md ? std::vector<std::string>{"City", "First era", "Second era", "Third era", "Fourth era", "Total"}
                  : std::vector<std::string>{"city", "era1", "era2", "era3", "era4", "total"};
    for (const auto& row : table.rows) {
        std::vector<std::string> cells{row.city};
        for (const auto c : row.counts) cells.push_back(md && c == 0 ? "" : std::to_string(c));
        cells.push_back(std::to_string(row.total()));
        t.rows.push_back(std::move(cells));
    }
    auto text = t.render(format);
    if (table.unknown_generation > 0) {
        text += "# narrators without generation: " + std::to_string(table.unknown_generation) + "\n";
    }
    return text;
}

std::string render_degree_dist(const DegreeHistogram& histogram, bool loglog) {
    Table t{{"k", "count"}, {}};
    if (loglog) {
        t.header.push_back("log10k");
        t.header.push_back("log10count");
    }
    for (const auto& [k, count] : histogram.buckets) {
        if (loglog && k == 0) continue;  // log10(0) is undefined
        std::vector<std::string> row{std::to_string(k), std::to_string(count)};
        if (loglog) {
            row.push_back(format_fixed(std::log10(static_cast<double>(k)), 6));
            row.push_back(format_fixed(std::log10(static_cast<double>(count)), 6));
        }
        t.rows.push_back(std::move(row));
    }
    return t.render(TableFormat::Csv);
}

std::string render_smallworld(const NarratorGraph& graph) {
    Table t{{"metric", "value"}, {}};
    t.rows.push_back({"node_count", std::to_string(graph.node_count())});
    t.rows.push_back({"clustering", format_double(global_clustering(graph))});
    t.rows.push_back({"largest_component_size", std::to_string(largest_component(graph).size())});
    t.rows.push_back({"avg_path_length", format_double(avg_path_length(graph))});
    return t.render(TableFormat::Csv);
}

std::string render_powerlaw(const NarratorGraph& graph, Direction direction, std::int64_t xmin, PowerLawMethod method) {
    const auto degrees = degree_sequence(graph, direction);
    const auto fit = fit_power_law(degrees, xmin, method);
    Table t{{"direction", "method", "alpha", "xmin", "n_tail"}, {}};
    t.rows.push_back({std::string(to_string(direction)), std::string(to_string(method)), format_double(fit.alpha),
                      std::to_string(fit.xmin), std::to_string(fit.n_tail)});
    return t.render(TableFormat::Csv);
}

std::string render_layout(const NodePositions& positions) {
    Table t{{"id", "x", "y"}, {}};
    for (std::size_t i = 0; i < positions.ids.size(); ++i) {
        t.rows.push_back({positions.ids[i], format_double(positions.points[i].x), format_double(positions.points[i].y)});
    }
    return t.render(TableFormat::Csv);
}

// ---------------------------------------------------------------------------
// option groups

struct CentralityFlags {
    std::string measure = "pagerank";
    double damping = 0.85;
    double tolerance = 1e-9;
    int max_iter = 200;
    bool unweighted = false;
    bool normalized = false;

    CentralityOptions options() const {
        CentralityOptions o;
        o.pagerank.damping = damping;
        o.pagerank.tolerance = tolerance;
        o.pagerank.max_iterations = max_iter;
        o.pagerank.use_edge_weights = !unweighted;
        o.betweenness.normalized = normalized;
        return o;
    }
};

void add_centrality_params(CLI::App* cmd, CentralityFlags& f) {
    cmd->add_option("--damping", f.damping, "PageRank damping factor")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--tolerance", f.tolerance, "PageRank L1 convergence tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", f.max_iter, "PageRank iteration cap")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--unweighted", f.unweighted, "PageRank ignores edge weights");
    cmd->add_flag("--normalized", f.normalized, "Betweenness divided by (N-1)(N-2)");
}

struct CommunityFlags {
    double resolution = 1.0;
    std::uint64_t seed = 42;
    double min_gain = 1e-7;

    LouvainConfig config() const { return LouvainConfig{resolution, seed, min_gain}; }
};

void add_community_params(CLI::App* cmd, CommunityFlags& f, const std::string& seed_flag = "--seed") {
    cmd->add_option("--resolution", f.resolution, "Modularity resolution")->check(CLI::PositiveNumber);
    cmd->add_option(seed_flag, f.seed, "Seed for the node visit order");
    cmd->add_option("--min-gain", f.min_gain, "Smallest modularity gain worth a move")->check(CLI::PositiveNumber);
}

struct LayoutFlags {
    int iterations = 100;
    std::uint64_t seed = 42;
    double area = 1.0;
    double spacing = 1.0;

    LayoutConfig config() const { return LayoutConfig{iterations, area, spacing, seed}; }
};

void add_layout_params(CLI::App* cmd, LayoutFlags& f, const std::string& prefix = "") {
    cmd->add_option("--" + prefix + "iterations", f.iterations, "Layout iterations")->check(CLI::NonNegativeNumber);
    cmd->add_option("--" + prefix + "seed", f.seed, "Seed for the initial placement");
    cmd->add_option("--" + prefix + "area", f.area, "Layout frame area")->check(CLI::PositiveNumber);
    cmd->add_option("--" + prefix + "spacing", f.spacing, "Spacing constant C")->check(CLI::PositiveNumber);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transmission-chain network analysis for narrator corpora", "isnad"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    InputOptions in;
    std::string output;
    std::string format = "csv";

    // ingest
    bool strict = false;
    auto* ingest = app.add_subcommand("ingest", "Parse and validate a corpus and write a graph snapshot");
    ingest->add_option("--narrators", in.narrators, "Narrator CSV")->required();
    ingest->add_option("--hadith", in.hadith, "Hadith records (JSON lines)")->required();
    ingest->add_option("--chain-order", in.chain_order, "Chain listing order")
        ->check(CLI::IsMember({"source-first", "compiler-first"}));
    ingest->add_option("--pair-dedup", in.pair_dedup, "Pair counting mode")->check(CLI::IsMember({"record", "chain"}));
    ingest->add_option("-o,--output", output, "Snapshot path")->required();
    ingest->add_flag("--strict", strict, "Fail when the corpus has any defect");

    // stats
    auto* stats = app.add_subcommand("stats", "Corpus and graph summary statistics");
    add_input_options(stats, in);
    stats->add_option("--format", format, "csv|md");
    stats->add_option("-o,--output", output, "Output file");

    // centrality
    CentralityFlags cflags;
    std::size_t top = 0;
    bool top_given = false;
    auto* centrality = app.add_subcommand("centrality", "Rank narrators by a centrality measure");
    add_input_options(centrality, in);
    centrality->add_option("--measure", cflags.measure, "Measure")
        ->check(CLI::IsMember({"pagerank", "betweenness", "indegree", "outdegree", "weighted-indegree",
                               "weighted-outdegree"}));
    add_centrality_params(centrality, cflags);
    auto* top_opt = centrality->add_option("--top", top, "Keep the K highest scores");
    centrality->add_option("--format", format, "csv|tsv|md");
    centrality->add_option("-o,--output", output, "Output file");

    // communities
    CommunityFlags mflags;
    auto* communities = app.add_subcommand("communities", "Louvain communities on the symmetrized graph");
    add_input_options(communities, in);
    add_community_params(communities, mflags);
    communities->add_option("--format", format, "csv|md");
    communities->add_option("-o,--output", output, "Output file");

    // era-table
    std::int64_t min_total = 5;
    auto* era = app.add_subcommand("era-table", "Narrator counts by city and era");
    add_input_options(era, in);
    era->add_option("--min-total", min_total, "Fold cities with fewer narrators into 'other'");
    era->add_option("--format", format, "csv|md");
    era->add_option("-o,--output", output, "Output file");

    // degree-dist
    std::string direction = "total";
    bool loglog = false;
    auto* degree = app.add_subcommand("degree-dist", "Degree histogram");
    add_input_options(degree, in);
    degree->add_option("--direction", direction, "in|out|total")->check(CLI::IsMember({"in", "out", "total"}));
    degree->add_flag("--loglog", loglog, "Add log10 columns (rows with k = 0 are dropped)");
    degree->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));
    degree->add_option("-o,--output", output, "Output file");

    // smallworld
    auto* smallworld = app.add_subcommand("smallworld", "Clustering coefficient and average path length");
    add_input_options(smallworld, in);
    smallworld->add_option("-o,--output", output, "Output file");

    // powerlaw
    std::int64_t xmin = 1;
    std::string method = "exact";
    auto* powerlaw = app.add_subcommand("powerlaw", "Discrete power-law exponent of the degree sequence");
    add_input_options(powerlaw, in);
    powerlaw->add_option("--xmin", xmin, "Smallest degree in the tail")->check(CLI::PositiveNumber);
    powerlaw->add_option("--direction", direction, "in|out|total")->check(CLI::IsMember({"in", "out", "total"}));
    powerlaw->add_option("--method", method, "exact|approx")->check(CLI::IsMember({"exact", "approx"}));
    powerlaw->add_option("-o,--output", output, "Output file");

    // layout
    LayoutFlags lflags;
    auto* layout = app.add_subcommand("layout", "Fruchterman-Reingold node positions");
    add_input_options(layout, in);
    add_layout_params(layout, lflags);
    layout->add_option("-o,--output", output, "Output file");

    // export
    std::string export_format = "gexf";
    bool with_layout = false;
    bool with_communities = false;
    std::vector<std::string> with_centrality;
    LayoutFlags xlflags;
    CommunityFlags xmflags;
    CentralityFlags xcflags;
    auto* exporter = app.add_subcommand("export", "Write the graph for external tools");
    add_input_options(exporter, in);
    exporter->add_option("--format", export_format, "gexf|dot|edgelist")
        ->check(CLI::IsMember({"gexf", "dot", "edgelist"}));
    exporter->add_flag("--with-layout", with_layout, "Attach layout positions (gexf)");
    exporter->add_flag("--with-communities", with_communities, "Attach Louvain communities (gexf)");
    exporter->add_option("--with-centrality", with_centrality, "Comma-separated measures to attach (gexf)")
        ->delimiter(',')
        ->check(CLI::IsMember({"pagerank", "betweenness", "indegree", "outdegree", "weighted-indegree",
                               "weighted-outdegree"}));
    add_layout_params(exporter, xlflags, "layout-");
    add_community_params(exporter, xmflags, "--community-seed");
    add_centrality_params(exporter, xcflags);
    exporter->add_option("-o,--output", output, "Output file");

    // report
    std::size_t report_top = 10;
    CommunityFlags rmflags;
    CentralityFlags rcflags;
    std::int64_t report_min_total = 5;
    auto* report = app.add_subcommand("report", "Summary, top rankings, communities and era table in one document");
    add_input_options(report, in);
    report->add_option("--top", report_top, "Rows per ranking");
    report->add_option("--min-total", report_min_total, "Era table row threshold");
    add_community_params(report, rmflags);
    add_centrality_params(report, rcflags);
    report->add_option("-o,--output", output, "Output file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    top_given = top_opt->count() > 0;

    if (ingest->parsed()) {
        auto snap = ingest_corpus(in);
        if (snap.report.has_defects()) {
            if (strict) {
                err << "error: validation: corpus has " << snap.report.describe().size() << " defect(s)\n";
                for (const auto& line : snap.report.describe()) err << "  " << line << "\n";
                return kExitFailure;
            }
            warn_defects(snap.report, err);
        }
        save_snapshot(output, snap);
        err << "wrote " << output << ": " << snap.graph.node_count() << " nodes, " << snap.graph.edge_count()
            << " edges from " << snap.counts.hadith_count << " of " << snap.report.record_count << " records\n";
        return kExitOk;
    }

    const auto snap = load_inputs(in);
    const auto& graph = snap.graph;

    if (stats->parsed()) {
        warn_defects(snap.report, err);
        emit(render_stats(snap, parse_table_format(format)), output, out);
    } else if (centrality->parsed()) {
        const auto measure = parse_measure(cflags.measure);
        const auto options = cflags.options();
        ScoreTable scores;
        if (measure == Measure::PageRank) {
            auto result = pagerank(graph, options.pagerank);
            if (!result.converged) {
                err << "warning: pagerank did not converge within " << result.iterations
                    << " iterations (last L1 change " << format_double(result.last_change) << ")\n";
            }
            scores = std::move(result.table);
        } else {
            scores = compute_centrality(graph, measure, options);
        }
        emit(render_ranking(graph, scores, top_given ? top : scores.size(), parse_table_format(format)), output, out);
    } else if (communities->parsed()) {
        emit(render_communities(graph, louvain(graph, mflags.config()), parse_table_format(format)), output, out);
    } else if (era->parsed()) {
        const auto fmt = parse_table_format(format);
        if (fmt == TableFormat::Tsv) throw UsageError("era-table supports csv|md");
        emit(render_era_table(era_city_table(narrator_table(graph), min_total), fmt), output, out);
    } else if (degree->parsed()) {
        emit(render_degree_dist(degree_distribution(graph, parse_direction(direction)), loglog), output, out);
    } else if (smallworld->parsed()) {
        emit(render_smallworld(graph), output, out);
    } else if (powerlaw->parsed()) {
        emit(render_powerlaw(graph, parse_direction(direction), xmin, parse_power_law_method(method)), output, out);
    } else if (layout->parsed()) {
        emit(render_layout(fr_layout(graph, lflags.config())), output, out);
    } else if (exporter->parsed()) {
        std::string text;
        if (export_format == "gexf") {
            GexfAnnotations notes;
            const auto options = xcflags.options();
            for (const auto& m : with_centrality) notes.scores.push_back(compute_centrality(graph, parse_measure(m), options));
            if (with_communities) notes.partition = louvain(graph, xmflags.config());
            if (with_layout) notes.positions = fr_layout(graph, xlflags.config());
            text = export_gexf(graph, notes);
        } else {
            if (with_layout || with_communities || !with_centrality.empty()) {
                throw UsageError("--with-* annotations are only written by --format gexf");
            }
            text = export_format == "dot" ? export_dot(graph) : export_edgelist(graph);
        }
        emit(text, output, out);
    } else if (report->parsed()) {
        std::string doc = "# isnad report\n";
        doc += "## stats\n" + render_stats(snap, TableFormat::Csv);
        const auto options = rcflags.options();
        for (const auto m : {Measure::PageRank, Measure::Betweenness, Measure::Indegree, Measure::Outdegree,
                             Measure::WeightedIndegree, Measure::WeightedOutdegree}) {
            doc += "## centrality " + std::string(to_string(m)) + " top " + std::to_string(report_top) + "\n";
            doc += render_ranking(graph, compute_centrality(graph, m, options), report_top, TableFormat::Csv);
        }
        doc += "## communities\n";
        doc += graph.edge_count() == 0 ? std::string("# community_count=0\n")
                                       : community_summary(louvain(graph, rmflags.config()));
        doc += "## era-table\n" + render_era_table(era_city_table(narrator_table(graph), report_min_total), TableFormat::Csv);
        emit(doc, output, out);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const UsageError& e) {
        err << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace isnad
