#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace mike::util {

// Minimal INI reader: `[section]` headers, `key = value` pairs, `#`/`;`
// comment lines. Values keep internal whitespace; surrounding whitespace is
// trimmed. Keys are addressed as "section.key" ("" section for top-level keys).
class Ini {
public:
    static Ini parse(const std::string& text);
    static Ini load(const std::filesystem::path& file);

    std::optional<std::string> get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    bool has(const std::string& key) const;
    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace mike::util
