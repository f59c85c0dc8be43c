#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isnad/corpus_model.hpp"
#include "isnad/graph.hpp"

namespace isnad {

inline constexpr const char* kOtherCityRow = "other";
inline constexpr const char* kUnknownCityRow = "unknown";

struct EraCityRow {
    std::string city;
    std::array<std::int64_t, kEraCount> counts{};  // counts[era - 1]

    std::int64_t total() const noexcept;
};

/// Narrator counts by city and era. Regular rows come first, ordered by
/// descending total then city label; the "other" and "unknown" rows follow when non-empty.
struct EraCityTable {
    std::vector<EraCityRow> rows;
    std::int64_t unknown_generation = 0;  // narrators left out for lack of a generation

    std::array<std::int64_t, kEraCount> column_sums() const noexcept;
};

/// Groups narrators by (city, era). Cities match after trimming and ASCII case
/// folding; the row label is the spelling of the lowest-id narrator in the group.
/// Rows whose total is below min_row_total fold into "other"; empty cities go to "unknown".
EraCityTable era_city_table(const NarratorTable& table, std::int64_t min_row_total);

/// Era -> narrator count, listing only eras with at least one narrator.
std::map<int, std::int64_t> per_era_counts(const NarratorTable& table);

/// Table of the narrators present in a graph, for analyses run off a snapshot.
NarratorTable narrator_table(const NarratorGraph& graph);

}  // namespace isnad
