#pragma once

#include <string>
#include <string_view>

namespace isnad {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

/// Fixed-point text with `decimals` digits, independent of the global locale.
std::string format_fixed(double value, int decimals);

std::string trim(std::string_view text);

/// ASCII case folding; bytes >= 0x80 pass through unchanged.
std::string fold_case(std::string_view text);

}  // namespace isnad
