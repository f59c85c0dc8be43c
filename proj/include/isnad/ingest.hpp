#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isnad/corpus_model.hpp"

namespace isnad {

/// Order in which a hadith file lists each chain. Sanad text names the
/// compiler-side narrator first; the in-memory model is always source-first.
enum class ChainOrder { SourceFirst, CompilerFirst };

ChainOrder parse_chain_order(std::string_view text);
std::string_view to_string(ChainOrder order);

/// Reads the narrator CSV (header `id,name,generation,city`).
/// An empty generation field marks the narrator's generation as unknown.
NarratorTable parse_narrators(const std::filesystem::path& path);
NarratorTable read_narrators(std::istream& in, const std::string& source = "<narrators>");

/// Reads line-delimited JSON hadith records. Chains listed compiler-first are
/// reversed so every stored chain is source-first.
std::vector<HadithRecord> parse_hadith_records(const std::filesystem::path& path, ChainOrder order);
std::vector<HadithRecord> read_hadith_records(std::istream& in, ChainOrder order,
                                              const std::string& source = "<hadith>");

/// Writes records in the same line format, listing chains in `order`.
void write_hadith_records(std::ostream& out, std::span<const HadithRecord> records,
                          ChainOrder order = ChainOrder::SourceFirst);

struct KeyedId {
    std::string record_key;
    std::string narrator_id;

    bool operator==(const KeyedId&) const = default;
};

struct ValidationReport {
    std::vector<KeyedId> unknown_narrator_refs;
    std::vector<std::string> duplicate_records;
    std::vector<KeyedId> intra_chain_repeats;
    std::size_t record_count = 0;
    std::size_t multi_chain_count = 0;

    bool has_defects() const noexcept {
        return !unknown_narrator_refs.empty() || !duplicate_records.empty() || !intra_chain_repeats.empty();
    }

    /// One human-readable line per defect, in report order.
    std::vector<std::string> describe() const;
};

/// Lists defects without throwing. Each defect appears once per (record, id).
ValidationReport validate_corpus(std::span<const HadithRecord> records, const NarratorTable& table);

/// Records eligible for graph building: no unknown ids, no repeated id inside a
/// chain, and not a later copy of an already-seen key.
std::vector<HadithRecord> accepted_records(std::span<const HadithRecord> records, const NarratorTable& table);

}  // namespace isnad
