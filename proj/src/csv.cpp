#include "isnad/csv.hpp"

#include "isnad/errors.hpp"

namespace isnad::csv {

std::optional<Row> Reader::next() {
    while (true) {
        Row row;
        row.line = line_;
        std::string field;
        bool in_quotes = false;
        bool field_was_quoted = false;
        bool any_char = false;
        int c;
        while ((c = in_.get()) != std::char_traits<char>::eof()) {
            any_char = true;
            const char ch = static_cast<char>(c);
            if (in_quotes) {
                if (ch == '"') {
                    if (in_.peek() == '"') {
                        in_.get();
                        field.push_back('"');
                    } else {
                        in_quotes = false;
                    }
                } else {
                    if (ch == '\n') ++line_;
                    field.push_back(ch);
                }
                continue;
            }
            if (ch == '"') {
                if (!field.empty() || field_was_quoted) {
                    throw ParseError(source_, line_, "unexpected quote inside unquoted field");
                }
                in_quotes = true;
                field_was_quoted = true;
            } else if (ch == ',') {
                row.fields.push_back(std::move(field));
                field.clear();
                field_was_quoted = false;
            } else if (ch == '\r' && in_.peek() == '\n') {
                // folded into the following '\n'
            } else if (ch == '\n') {
                ++line_;
                break;
            } else {
                if (field_was_quoted) {
                    throw ParseError(source_, line_, "characters after closing quote");
                }
                field.push_back(ch);
            }
        }
        if (in_quotes) {
            throw ParseError(source_, row.line, "unterminated quoted field");
        }
        if (!any_char) return std::nullopt;
        row.fields.push_back(std::move(field));
        const bool blank = row.fields.size() == 1 && row.fields[0].empty() && !field_was_quoted;
        if (blank) {
            if (in_.eof()) return std::nullopt;
            continue;
        }
        return row;
    }
}

std::string escape(std::string_view field, char delimiter) {
    const bool needs_quotes = field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& fields, char delimiter) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(delimiter);
        out += escape(fields[i], delimiter);
    }
    return out;
}

}  // namespace isnad::csv
