#pragma once

#include <filesystem>
#include <iosfwd>

#include "isnad/graph.hpp"
#include "isnad/ingest.hpp"

namespace isnad {

/// A built graph plus the corpus facts downstream commands need without re-parsing.
struct Snapshot {
    NarratorGraph graph;
    CorpusCounts counts;        // over the records that entered the graph
    ValidationReport report;    // over every record that was read
    PairDedup dedup = PairDedup::Record;
};

/// Runs validation and graph building over a parsed corpus.
Snapshot make_snapshot(std::span<const HadithRecord> records, const NarratorTable& table,
                       PairDedup dedup = PairDedup::Record);

/// JSON document with nodes sorted by id and edges as sorted
/// [source, target, weight] triples. Byte-identical for identical snapshots.
void write_snapshot(std::ostream& out, const Snapshot& snapshot);
void save_snapshot(const std::filesystem::path& path, const Snapshot& snapshot);

/// Throws ParseError on malformed documents and InvariantError on graph invariant violations.
Snapshot read_snapshot(std::istream& in, const std::string& source = "<snapshot>");
Snapshot load_snapshot(const std::filesystem::path& path);

}  // namespace isnad
