#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "isnad/ingest.hpp"
#include "isnad/snapshot.hpp"

namespace fixture {

inline std::filesystem::path data(const std::string& name) { return std::filesystem::path(ISNAD_TEST_DATA) / name; }

inline isnad::NarratorTable narrators() { return isnad::parse_narrators(data("narrators.csv")); }

inline std::vector<isnad::HadithRecord> records(const std::string& name) {
    return isnad::parse_hadith_records(data(name), isnad::ChainOrder::CompilerFirst);
}

inline isnad::Snapshot snapshot(const std::string& name) {
    return isnad::make_snapshot(records(name), narrators());
}

inline isnad::NarratorTable table_from(const std::string& csv_text) {
    std::istringstream in(csv_text);
    return isnad::read_narrators(in);
}

inline std::vector<isnad::HadithRecord> records_from(const std::string& jsonl,
                                                     isnad::ChainOrder order = isnad::ChainOrder::SourceFirst) {
    std::istringstream in(jsonl);
    return isnad::read_hadith_records(in, order);
}

}  // namespace fixture
