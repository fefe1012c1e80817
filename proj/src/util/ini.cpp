#include "mike/util/ini.hpp"

#include <fstream>
#include <sstream>

#include "mike/errors.hpp"
#include "mike/util/strings.hpp"

namespace mike::util {

Ini Ini::parse(const std::string& text) {
    Ini ini;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ParseError("ini line " + std::to_string(lineno) + ": unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("ini line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ParseError("ini line " + std::to_string(lineno) + ": empty key");
        ini.values_[section.empty() ? key : section + "." + key] = value;
    }
    return ini;
}

Ini Ini::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open config file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::optional<std::string> Ini::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::string Ini::get_or(const std::string& key, const std::string& fallback) const {
    auto v = get(key);
    return v ? *v : fallback;
}

bool Ini::has(const std::string& key) const { return values_.count(key) > 0; }

}  // namespace mike::util
