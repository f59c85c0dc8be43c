#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isnad::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line where the row starts
};

/// RFC 4180 style reader: comma separated, double-quote quoting with "" escapes,
/// quoted fields may span lines. Accepts LF and CRLF endings.
class Reader {
public:
    Reader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    /// Next row, or nullopt at end of input. Blank lines are skipped.
    std::optional<Row> next();

    const std::string& source() const noexcept { return source_; }

private:
    std::istream& in_;
    std::string source_;
    std::size_t line_ = 1;
};

/// Quotes a field only when it contains a delimiter, quote, or line break.
std::string escape(std::string_view field, char delimiter = ',');

std::string join(const std::vector<std::string>& fields, char delimiter = ',');

}  // namespace isnad::csv
