#include "isnad/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "isnad/csv.hpp"
#include "isnad/errors.hpp"
#include "isnad/format.hpp"

namespace isnad {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return in;
}

void strip_bom(std::istream& in) {
    if (in.peek() != 0xEF) return;
    char bom[3];
    in.read(bom, 3);
    if (!(static_cast<unsigned char>(bom[1]) == 0xBB && static_cast<unsigned char>(bom[2]) == 0xBF)) {
        throw ParseError("<input>", 1, "invalid byte-order mark");
    }
}

std::optional<int> parse_generation(const std::string& field, const std::string& source, std::size_t line) {
    const auto text = trim(field);
    if (text.empty()) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(source, line, "generation '" + text + "' is not an integer");
    }
    if (value < kMinGeneration || value > kMaxGeneration) {
        throw DomainError(source + ":" + std::to_string(line) + ": generation " + std::to_string(value) +
                          " is outside 0..12");
    }
    return value;
}

std::string require_string(const json& object, const char* field, const std::string& source, std::size_t line) {
    auto it = object.find(field);
    if (it == object.end()) throw ParseError(source, line, std::string("missing field '") + field + "'");
    if (!it->is_string()) throw ParseError(source, line, std::string("field '") + field + "' must be a string");
    return it->get<std::string>();
}

}  // namespace

ChainOrder parse_chain_order(std::string_view text) {
    if (text == "source-first") return ChainOrder::SourceFirst;
    if (text == "compiler-first") return ChainOrder::CompilerFirst;
    throw DomainError("unknown chain order '" + std::string(text) + "' (expected source-first|compiler-first)");
}

std::string_view to_string(ChainOrder order) {
    return order == ChainOrder::SourceFirst ? "source-first" : "compiler-first";
}

NarratorTable parse_narrators(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_narrators(in, path.string());
}

NarratorTable read_narrators(std::istream& in, const std::string& source) {
    strip_bom(in);
    csv::Reader reader(in, source);
    auto header = reader.next();
    if (!header) throw ParseError(source, 1, "missing header row");
    const std::vector<std::string> expected{"id", "name", "generation", "city"};
    std::vector<std::string> got;
    for (const auto& f : header->fields) got.push_back(trim(f));
    if (got != expected) {
        throw ParseError(source, header->line, "header must be 'id,name,generation,city'");
    }

    NarratorTable table;
    while (auto row = reader.next()) {
        if (row->fields.size() != 4) {
            throw ParseError(source, row->line,
                             "expected 4 fields, found " + std::to_string(row->fields.size()));
        }
        Narrator narrator;
        narrator.id = trim(row->fields[0]);
        narrator.name = trim(row->fields[1]);
        narrator.generation = parse_generation(row->fields[2], source, row->line);
        narrator.city = trim(row->fields[3]);
        if (narrator.id.empty()) throw ParseError(source, row->line, "empty narrator id");
        if (table.contains(narrator.id)) {
            throw ValidationError(source + ":" + std::to_string(row->line) + ": duplicate narrator id '" +
                                  narrator.id + "'");
        }
        table.insert(std::move(narrator));
    }
    return table;
}

std::vector<HadithRecord> parse_hadith_records(const std::filesystem::path& path, ChainOrder order) {
    auto in = open_input(path);
    return read_hadith_records(in, order, path.string());
}

std::vector<HadithRecord> read_hadith_records(std::istream& in, ChainOrder order, const std::string& source) {
    strip_bom(in);
    std::vector<HadithRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        json doc;
        try {
            doc = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(source, line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_object()) throw ParseError(source, line_no, "record must be a JSON object");

        HadithRecord record;
        record.collection = require_string(doc, "collection", source, line_no);
        record.book = require_string(doc, "book", source, line_no);
        record.number = require_string(doc, "number", source, line_no);

        auto chains = doc.find("chains");
        if (chains == doc.end()) throw ParseError(source, line_no, "missing field 'chains'");
        if (!chains->is_array()) throw ParseError(source, line_no, "field 'chains' must be an array");
        if (chains->empty()) {
            throw ValidationError(source + ":" + std::to_string(line_no) + ": record " + record.key() +
                                  " has no chains");
        }
        for (const auto& listed : *chains) {
            if (!listed.is_array()) throw ParseError(source, line_no, "each chain must be an array of ids");
            if (listed.empty()) {
                throw ValidationError(source + ":" + std::to_string(line_no) + ": record " + record.key() +
                                      " has an empty chain");
            }
            Chain chain;
            for (const auto& id : listed) {
                if (!id.is_string()) throw ParseError(source, line_no, "narrator ids must be strings");
                auto text = trim(id.get<std::string>());
                if (text.empty()) throw ParseError(source, line_no, "empty narrator id in chain");
                chain.narrators.push_back(std::move(text));
            }
            if (order == ChainOrder::CompilerFirst) {
                std::reverse(chain.narrators.begin(), chain.narrators.end());
            }
            record.chains.push_back(std::move(chain));
        }
        records.push_back(std::move(record));
    }
    return records;
}

void write_hadith_records(std::ostream& out, std::span<const HadithRecord> records, ChainOrder order) {
    for (const auto& record : records) {
        json chains = json::array();
        for (const auto& chain : record.chains) {
            std::vector<std::string> ids = chain.narrators;
            if (order == ChainOrder::CompilerFirst) std::reverse(ids.begin(), ids.end());
            chains.push_back(ids);
        }
        // Fixed field order keeps the line format stable.
        out << "{\"collection\":" << json(record.collection).dump() << ",\"book\":" << json(record.book).dump()
            << ",\"number\":" << json(record.number).dump() << ",\"chains\":" << chains.dump() << "}\n";
    }
}

std::vector<std::string> ValidationReport::describe() const {
    std::vector<std::string> lines;
    for (const auto& ref : unknown_narrator_refs) {
        lines.push_back("record " + ref.record_key + " references unknown narrator id '" + ref.narrator_id + "'");
    }
    for (const auto& key : duplicate_records) {
        lines.push_back("record " + key + " is duplicated");
    }
    for (const auto& rep : intra_chain_repeats) {
        lines.push_back("record " + rep.record_key + " repeats narrator id '" + rep.narrator_id +
                        "' within one chain");
    }
    return lines;
}

ValidationReport validate_corpus(std::span<const HadithRecord> records, const NarratorTable& table) {
    ValidationReport report;
    report.record_count = records.size();
    std::set<std::string> seen_keys;
    std::set<std::string> reported_duplicates;

    for (const auto& record : records) {
        const auto key = record.key();
        if (record.chains.size() >= 2) ++report.multi_chain_count;
        if (!seen_keys.insert(key).second && reported_duplicates.insert(key).second) {
            report.duplicate_records.push_back(key);
        }

        std::set<std::string> unknown_here;
        std::set<std::string> repeated_here;
        for (const auto& chain : record.chains) {
            std::unordered_set<std::string_view> in_chain;
            for (const auto& id : chain.narrators) {
                if (!table.contains(id) && unknown_here.insert(id).second) {
                    report.unknown_narrator_refs.push_back({key, id});
                }
                if (!in_chain.insert(id).second && repeated_here.insert(id).second) {
                    report.intra_chain_repeats.push_back({key, id});
                }
            }
        }
    }
    return report;
}

std::vector<HadithRecord> accepted_records(std::span<const HadithRecord> records, const NarratorTable& table) {
    std::vector<HadithRecord> accepted;
    std::set<std::string> seen_keys;
    for (const auto& record : records) {
        if (!seen_keys.insert(record.key()).second) continue;
        const bool clean = std::all_of(record.chains.begin(), record.chains.end(), [&](const Chain& chain) {
            std::unordered_set<std::string_view> in_chain;
            return std::all_of(chain.narrators.begin(), chain.narrators.end(), [&](const std::string& id) {
                return table.contains(id) && in_chain.insert(id).second;
            });
        });
        if (clean) accepted.push_back(record);
    }
    return accepted;
}

}  // namespace isnad
