#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mike::text {

// Canonical composition; applied to every text field on ingestion.
std::string nfc(std::string_view utf8);

// Compatibility composition + Unicode case folding (ICU NFKC_Casefold).
std::string nfkc_casefold(std::string_view utf8);

// Remove all code points in general category P* (punctuation).
std::string strip_punctuation(std::string_view utf8);

// Replace runs of Unicode whitespace with a single ASCII space and trim.
std::string collapse_whitespace(std::string_view utf8);

// The answer-matching fold: nfkc_casefold -> strip_punctuation ->
// collapse_whitespace. " Paris." and "paris" fold to the same string.
std::string fold_for_match(std::string_view utf8);

// One UTF-8 string per code point.
std::vector<std::string> codepoints(std::string_view utf8);

std::string reverse_codepoints(std::string_view utf8);

}  // namespace mike::text
