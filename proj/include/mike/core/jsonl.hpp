#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mike/core/types.hpp"

namespace mike::core {

// Canonical one-line serialization of a unified entry. Field order is fixed
// (id, task, lang, edit{query,new_answer,old_answer?}, tests{reliability,
// generality, locality, portability}); golden files are byte-exact against it.
std::string entry_to_line(const UnifiedEntry& entry);

// Parses one record; applies NFC to every text field. Throws ParseError on
// malformed input, ValidationError when invariants fail.
UnifiedEntry entry_from_line(const std::string& line);

std::vector<UnifiedEntry> read_entries(std::istream& in, const std::string& source_name);
std::vector<UnifiedEntry> read_entries(const std::filesystem::path& file);
void write_entries(const std::vector<UnifiedEntry>& entries, std::ostream& out);
void write_entries(const std::vector<UnifiedEntry>& entries, const std::filesystem::path& file);

}  // namespace mike::core
