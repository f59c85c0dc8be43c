#include "isnad/era_locality.hpp"

#include <algorithm>
#include <numeric>

#include "isnad/format.hpp"

namespace isnad {

std::int64_t EraCityRow::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::array<std::int64_t, kEraCount> EraCityTable::column_sums() const noexcept {
    std::array<std::int64_t, kEraCount> sums{};
    for (const auto& row : rows) {
        for (int e = 0; e < kEraCount; ++e) sums[e] += row.counts[e];
    }
    return sums;
}

EraCityTable era_city_table(const NarratorTable& table, std::int64_t min_row_total) {
    EraCityTable result;
    std::map<std::string, EraCityRow> by_city;  // keyed by folded name
    EraCityRow unknown{kUnknownCityRow, {}};

    // NarratorTable iterates in ascending id order, so the first spelling seen wins.
    for (const auto& [id, narrator] : table) {
        const auto era = narrator.era();
        if (!era) {
            ++result.unknown_generation;
            continue;
        }
        const auto city = trim(narrator.city);
        if (city.empty()) {
            ++unknown.counts[*era - 1];
            continue;
        }
        auto [it, inserted] = by_city.try_emplace(fold_case(city));
        if (inserted) it->second.city = city;
        ++it->second.counts[*era - 1];
    }

    EraCityRow other{kOtherCityRow, {}};
    for (auto& [key, row] : by_city) {
        if (row.total() < min_row_total) {
            for (int e = 0; e < kEraCount; ++e) other.counts[e] += row.counts[e];
        } else {
            result.rows.push_back(std::move(row));
        }
    }
    std::sort(result.rows.begin(), result.rows.end(), [](const EraCityRow& a, const EraCityRow& b) {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.city < b.city;
    });
    if (other.total() > 0) result.rows.push_back(other);
    if (unknown.total() > 0) result.rows.push_back(unknown);
    return result;
}

std::map<int, std::int64_t> per_era_counts(const NarratorTable& table) {
    std::map<int, std::int64_t> counts;
    for (const auto& [id, narrator] : table) {
        if (auto era = narrator.era()) ++counts[*era];
    }
    return counts;
}

NarratorTable narrator_table(const NarratorGraph& graph) {
    NarratorTable table;
    for (const auto& node : graph.nodes()) table.insert(node);
    return table;
}

}  // namespace isnad
