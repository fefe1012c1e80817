#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mike::util {

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char delim);
// Split on runs of ASCII whitespace, dropping empty pieces.
std::vector<std::string> split_ws(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string replace_all(std::string text, std::string_view from, std::string_view to);
std::string to_lower_ascii(std::string_view s);
std::size_t count_occurrences(std::string_view haystack, std::string_view needle);

// Fixed-precision decimal formatting (locale-independent), e.g. fmt_fixed(1.5, 2) == "1.50".
std::string fmt_fixed(double v, int decimals);

}  // namespace mike::util
