#include "isnad/snapshot.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "isnad/errors.hpp"

namespace isnad {

namespace {

using nlohmann::json;

constexpr const char* kFormatName = "isnad-graph";
constexpr int kFormatVersion = 1;

json keyed_ids_to_json(const std::vector<KeyedId>& items) {
    json out = json::array();
    for (const auto& item : items) out.push_back({item.record_key, item.narrator_id});
    return out;
}

std::vector<KeyedId> keyed_ids_from_json(const json& items) {
    std::vector<KeyedId> out;
    for (const auto& item : items) {
        out.push_back({item.at(0).get<std::string>(), item.at(1).get<std::string>()});
    }
    return out;
}

}  // namespace

Snapshot make_snapshot(std::span<const HadithRecord> records, const NarratorTable& table, PairDedup dedup) {
    Snapshot snapshot;
    snapshot.report = validate_corpus(records, table);
    const auto accepted = accepted_records(records, table);
    snapshot.graph = build_graph(accepted, table, dedup);
    snapshot.counts.hadith_count = accepted.size();
    for (const auto& r : accepted) {
        if (r.chains.size() >= 2) ++snapshot.counts.multi_chain_count;
    }
    snapshot.dedup = dedup;
    return snapshot;
}

void write_snapshot(std::ostream& out, const Snapshot& snapshot) {
    json doc;
    doc["format"] = kFormatName;
    doc["version"] = kFormatVersion;
    doc["pair_dedup"] = std::string(to_string(snapshot.dedup));
    doc["corpus"] = {
        {"hadith_count", snapshot.counts.hadith_count},
        {"multi_chain_count", snapshot.counts.multi_chain_count},
    };
    const auto& report = snapshot.report;
    doc["validation"] = {
        {"record_count", report.record_count},
        {"multi_chain_count", report.multi_chain_count},
        {"unknown_narrator_refs", keyed_ids_to_json(report.unknown_narrator_refs)},
        {"duplicate_records", report.duplicate_records},
        {"intra_chain_repeats", keyed_ids_to_json(report.intra_chain_repeats)},
    };

    json nodes = json::array();
    for (const auto& n : snapshot.graph.nodes()) {
        json node = {{"id", n.id}, {"name", n.name}, {"city", n.city}};
        node["generation"] = n.generation ? json(*n.generation) : json(nullptr);
        nodes.push_back(std::move(node));
    }
    doc["nodes"] = std::move(nodes);

    json edges = json::array();
    for (const auto& e : snapshot.graph.edges()) {
        edges.push_back({snapshot.graph.id(e.source), snapshot.graph.id(e.target), e.weight});
    }
    doc["edges"] = std::move(edges);
    out << doc.dump(1) << '\n';
}

void save_snapshot(const std::filesystem::path& path, const Snapshot& snapshot) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    write_snapshot(out, snapshot);
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

Snapshot read_snapshot(std::istream& in, const std::string& source) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(source, 1, std::string("invalid snapshot JSON: ") + e.what());
    }

    try {
        if (doc.at("format").get<std::string>() != kFormatName || doc.at("version").get<int>() != kFormatVersion) {
            throw ParseError(source, 1, "not an isnad-graph v1 snapshot");
        }
        Snapshot snapshot;
        snapshot.dedup = parse_pair_dedup(doc.at("pair_dedup").get<std::string>());
        snapshot.counts.hadith_count = doc.at("corpus").at("hadith_count").get<std::size_t>();
        snapshot.counts.multi_chain_count = doc.at("corpus").at("multi_chain_count").get<std::size_t>();

        const auto& v = doc.at("validation");
        snapshot.report.record_count = v.at("record_count").get<std::size_t>();
        snapshot.report.multi_chain_count = v.at("multi_chain_count").get<std::size_t>();
        snapshot.report.unknown_narrator_refs = keyed_ids_from_json(v.at("unknown_narrator_refs"));
        snapshot.report.duplicate_records = v.at("duplicate_records").get<std::vector<std::string>>();
        snapshot.report.intra_chain_repeats = keyed_ids_from_json(v.at("intra_chain_repeats"));

        std::vector<Narrator> nodes;
        for (const auto& node : doc.at("nodes")) {
            Narrator n;
            n.id = node.at("id").get<std::string>();
            n.name = node.at("name").get<std::string>();
            n.city = node.at("city").get<std::string>();
            if (!node.at("generation").is_null()) {
                n.generation = node.at("generation").get<int>();
                era_of_generation(*n.generation);
            }
            nodes.push_back(std::move(n));
        }
        std::vector<std::string> ids;
        for (const auto& n : nodes) ids.push_back(n.id);
        std::sort(ids.begin(), ids.end());
        auto index = [&](const std::string& id) {
            auto it = std::lower_bound(ids.begin(), ids.end(), id);
            if (it == ids.end() || *it != id) throw InvariantError("edge endpoint '" + id + "' is not a node");
            return static_cast<NodeIndex>(it - ids.begin());
        };
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges")) {
            edges.push_back({index(e.at(0).get<std::string>()), index(e.at(1).get<std::string>()),
                             e.at(2).get<std::int64_t>()});
        }
        snapshot.graph = NarratorGraph(std::move(nodes), std::move(edges));
        return snapshot;
    } catch (const json::exception& e) {
        throw ParseError(source, 1, std::string("malformed snapshot: ") + e.what());
    }
}

Snapshot load_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return read_snapshot(in, path.string());
}

}  // namespace isnad
