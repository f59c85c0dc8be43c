#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "isnad/errors.hpp"
#include "isnad/graph.hpp"
#include "isnad/snapshot.hpp"
#include "oracles.hpp"

using namespace isnad;

namespace {

const char* kAbc = "id,name,generation,city\na,A,0,\nb,B,1,\nc,C,2,\nd,D,,\n";

std::string record(const std::string& number, const std::string& chains) {
    return "{\"collection\":\"c\",\"book\":\"b\",\"number\":\"" + number + "\",\"chains\":" + chains + "}\n";
}

}  // namespace

TEST_CASE("three narrator chain") {
    const auto table = fixture::table_from(kAbc);
    const auto recs = fixture::records_from(record("1", "[[\"a\",\"b\",\"c\"]]"));
    const auto g = build_graph(recs, table);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.weight(g.require_index("a"), g.require_index("b")) == 1);
    CHECK(g.weight(g.require_index("b"), g.require_index("c")) == 1);
    CHECK(g.weight(g.require_index("a"), g.require_index("c")) == 0);
    CHECK(degree_profile(g, "b") == DegreeStats{1, 1, 1, 1});
}

TEST_CASE("pair in three records has weight three") {
    const auto table = fixture::table_from(kAbc);
    const auto recs = fixture::records_from(record("1", "[[\"a\",\"b\"]]") + record("2", "[[\"a\",\"b\",\"c\"]]") +
                                            record("3", "[[\"c\",\"a\",\"b\"]]"));
    const auto g = build_graph(recs, table);
    CHECK(g.weight(0, 1) == 3);
    CHECK(degree_profile(g, "a") == DegreeStats{1, 1, 1, 3});
}

TEST_CASE("worked example graph") {
    const auto snap = fixture::snapshot("worked_examples.jsonl");
    const auto& g = snap.graph;
    CHECK(g.edge_count() == 9);
    CHECK(g.node_count() == 11);  // 6 narrators in one chain, 5 in the other record
    CHECK(degree_profile(g, "umar_ibn_al_khattab") == DegreeStats{0, 1, 0, 1});
    CHECK(degree_profile(g, "20005") == DegreeStats{1, 1, 1, 1});
    const auto anas = g.require_index("anas_bin_malik");
    const auto qatada = g.require_index("qatada");
    const auto hmam = g.require_index("20297");
    CHECK(g.weight(anas, qatada) == 1);
    CHECK(g.weight(qatada, hmam) == 1);
    CHECK(g.weight(hmam, g.require_index("hisham_bin_abdul_malik")) == 1);
    CHECK(g.weight(hmam, g.require_index("muhammad_bin_snan")) == 1);
    CHECK(degree_profile(g, "20297") == DegreeStats{1, 2, 1, 2});
}

TEST_CASE("chain dedup counts shared pairs per chain") {
    const auto snap = make_snapshot(fixture::records("worked_examples.jsonl"), fixture::narrators(), PairDedup::Chain);
    const auto& g = snap.graph;
    CHECK(g.weight(g.require_index("anas_bin_malik"), g.require_index("qatada")) == 2);
    CHECK(g.weight(g.require_index("qatada"), g.require_index("20297")) == 2);
}

TEST_CASE("six narrator path") {
    const auto snap = fixture::snapshot("revelation.jsonl");
    const auto& g = snap.graph;
    CHECK(g.node_count() == 6);
    CHECK(g.edge_count() == 5);
    CHECK(degree_profile(g, "umar_ibn_al_khattab").outdegree == 1);
    CHECK(degree_profile(g, "umar_ibn_al_khattab").indegree == 0);
    CHECK(degree_profile(g, "abdullah_bin_al_zubair") == DegreeStats{1, 0, 1, 0});
    CHECK_THROWS_AS(degree_profile(g, "nobody"), LookupError);
}

TEST_CASE("isolated node has zero degree") {
    const auto g = oracle::make_graph(3, {{0, 1, 2}});
    CHECK(degree_profile(g, oracle::node_id(2)) == DegreeStats{});
}

TEST_CASE("graph invariants") {
    CHECK_THROWS_AS(oracle::make_graph(2, {{0, 0, 1}}), InvariantError);
    CHECK_THROWS_AS(oracle::make_graph(2, {{0, 1, 0}}), InvariantError);
    CHECK_THROWS_AS(oracle::make_graph(2, {{0, 2, 1}}), InvariantError);
    CHECK_THROWS_AS(oracle::make_graph(2, {{0, 1, 1}, {0, 1, 1}}), InvariantError);
    const auto table = fixture::table_from(kAbc);
    CHECK_THROWS_AS(build_graph(fixture::records_from(record("1", "[[\"a\",\"zz\"]]")), table), InvariantError);
}

TEST_CASE("weight sum equals distinct pairs per record") {
    Rng rng(7);
    const auto table = fixture::table_from(kAbc);
    const std::vector<std::string> ids{"a", "b", "c", "d"};
    std::string text;
    for (int r = 0; r < 40; ++r) {
        std::string chains = "[";
        const auto chain_count = 1 + rng.below(3);
        for (std::uint64_t c = 0; c < chain_count; ++c) {
            auto order = ids;
            rng.shuffle(std::span<std::string>(order));
            const auto len = 1 + rng.below(4);
            chains += c ? ",[" : "[";
            for (std::uint64_t i = 0; i < len; ++i) chains += (i ? ",\"" : "\"") + order[i] + "\"";
            chains += "]";
        }
        text += record(std::to_string(r), chains + "]");
    }
    const auto recs = fixture::records_from(text);
    std::int64_t expected = 0;
    for (const auto& rec : recs) {
        std::set<std::pair<std::string, std::string>> pairs;
        for (const auto& ch : rec.chains)
            for (std::size_t i = 0; i + 1 < ch.narrators.size(); ++i) pairs.emplace(ch.narrators[i], ch.narrators[i + 1]);
        expected += static_cast<std::int64_t>(pairs.size());
    }
    const auto g = build_graph(recs, table);
    std::int64_t total = 0;
    for (const auto& e : g.edges()) total += e.weight;
    CHECK(total == expected);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
        const auto d = degree_profile(g, g.id(v));
        CHECK(d.weighted_indegree >= d.indegree);
        CHECK(d.weighted_outdegree >= d.outdegree);
    }
}

TEST_CASE("cycles") {
    const auto table = fixture::table_from(kAbc);
    const auto g = build_graph(fixture::records_from(record("1", "[[\"a\",\"b\"]]") + record("2", "[[\"b\",\"a\",\"c\"]]")),
                               table);
    const auto cyc = cycle_edges(g);
    REQUIRE(cyc.size() == 2);
    CHECK(g.id(cyc[0].source) == "a");
    CHECK(g.id(cyc[1].source) == "b");
    const auto stats = corpus_summary(g, CorpusCounts{2, 0});
    CHECK_FALSE(stats.is_dag());
    CHECK(stats.cycle_edges == std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "a"}});
    CHECK(cycle_edges(fixture::snapshot("worked_examples.jsonl").graph).empty());
}

TEST_CASE("summary on a five record fixture") {
    const auto table = fixture::table_from(
        "id,name,generation,city\na,A,0,\nb,B,1,\nc,C,2,\nd,D,7,\ne,E,8,\nf,F,10,\ng,G,11,\n");
    const auto recs = fixture::records_from(record("1", "[[\"a\",\"b\",\"c\"]]") + record("2", "[[\"a\",\"d\"]]") +
                                            record("3", "[[\"d\",\"e\"]]") + record("4", "[[\"e\",\"f\"]]") +
                                            record("5", "[[\"b\",\"g\"]]"));
    const auto g = build_graph(recs, table);
    const auto stats = corpus_summary(g, recs, table);
    CHECK(stats.hadith_count == 5);
    CHECK(stats.multi_chain_count == 0);
    CHECK(stats.narrator_count == 7);
    CHECK(stats.edge_count == 6);
    CHECK(stats.per_era_narrator_counts == std::map<int, std::size_t>{{1, 1}, {2, 2}, {3, 2}, {4, 2}});
    std::size_t sum = 0;
    for (const auto& [era, n] : stats.per_era_narrator_counts) sum += n;
    CHECK(sum == stats.narrator_count);
    CHECK(stats.is_dag());
}

TEST_CASE("snapshot round trip") {
    const auto snap = make_snapshot(fixture::records("defects.jsonl"), fixture::narrators());
    std::ostringstream out;
    write_snapshot(out, snap);
    std::istringstream in(out.str());
    const auto back = read_snapshot(in);
    CHECK(back.graph.nodes() == snap.graph.nodes());
    CHECK(std::equal(back.graph.edges().begin(), back.graph.edges().end(), snap.graph.edges().begin(),
                     snap.graph.edges().end()));
    CHECK(back.counts.hadith_count == snap.counts.hadith_count);
    CHECK(back.report.unknown_narrator_refs == snap.report.unknown_narrator_refs);
    CHECK(back.report.duplicate_records == snap.report.duplicate_records);
    CHECK(back.report.intra_chain_repeats == snap.report.intra_chain_repeats);
    CHECK(back.report.record_count == 4);
    std::ostringstream again;
    write_snapshot(again, back);
    CHECK(again.str() == out.str());
}

TEST_CASE("snapshot rejects malformed documents") {
    std::istringstream bad("{\"format\":\"nope\"}");
    CHECK_THROWS_AS(read_snapshot(bad), ParseError);
    std::istringstream junk("not json");
    CHECK_THROWS_AS(read_snapshot(junk), ParseError);
}
