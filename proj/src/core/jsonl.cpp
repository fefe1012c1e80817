#include "mike/core/jsonl.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mike/errors.hpp"
#include "mike/text/unicode.hpp"
#include "mike/util/strings.hpp"

namespace mike::core {

namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

std::string norm(const json& j, const char* field, const std::string& where) {
    if (!j.contains(field) || !j.at(field).is_string())
        throw ParseError(where + ": missing or non-string field '" + field + "'");
    return text::nfc(j.at(field).get<std::string>());
}

std::optional<std::string> norm_opt(const json& j, const char* field, const std::string& where) {
    if (!j.contains(field)) return std::nullopt;
    if (!j.at(field).is_string())
        throw ParseError(where + ": non-string field '" + field + "'");
    return text::nfc(j.at(field).get<std::string>());
}

}  // namespace

std::string entry_to_line(const UnifiedEntry& entry) {
    ojson j;
    j["id"] = entry.id;
    j["task"] = to_tag(entry.task);
    j["lang"] = entry.language.str();
    ojson edit;
    edit["query"] = entry.edit.query;
    edit["new_answer"] = entry.edit.new_answer;
    if (entry.edit.old_answer) edit["old_answer"] = *entry.edit.old_answer;
    j["edit"] = std::move(edit);
    ojson tests;
    for (QueryKind kind : kAllKinds) {
        const TestQuery& t = entry.test(kind);
        ojson tj;
        tj["query"] = t.query;
        tj["answer"] = t.expected_answer;
        if (t.original_answer) tj["original_answer"] = *t.original_answer;
        tests[std::string(to_tag(kind))] = std::move(tj);
    }
    j["tests"] = std::move(tests);
    return j.dump();
}

UnifiedEntry entry_from_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed record: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("record is not an object");

    UnifiedEntry entry;
    if (!j.contains("id") || !j.at("id").is_string())
        throw ParseError("record: missing or non-string field 'id'");
    entry.id = j.at("id").get<std::string>();
    const std::string where = "record '" + entry.id + "'";

    if (!j.contains("task") || !j.at("task").is_string())
        throw ParseError(where + ": missing or non-string field 'task'");
    entry.task = parse_task(j.at("task").get<std::string>());
    if (!j.contains("lang") || !j.at("lang").is_string())
        throw ParseError(where + ": missing or non-string field 'lang'");
    entry.language = LanguageCode::parse(j.at("lang").get<std::string>());

    if (!j.contains("edit") || !j.at("edit").is_object())
        throw ParseError(where + ": missing object field 'edit'");
    const json& ej = j.at("edit");
    entry.edit.query = norm(ej, "query", where + ".edit");
    entry.edit.new_answer = norm(ej, "new_answer", where + ".edit");
    entry.edit.old_answer = norm_opt(ej, "old_answer", where + ".edit");
    entry.edit.language = entry.language;

    if (!j.contains("tests") || !j.at("tests").is_object())
        throw ParseError(where + ": missing object field 'tests'");
    for (auto& [tag, tj] : j.at("tests").items()) {
        QueryKind kind = parse_kind(tag);  // rejects tags outside the closed set
        TestQuery t;
        t.kind = kind;
        const std::string twhere = where + ".tests." + tag;
        if (!tj.is_object()) throw ParseError(twhere + ": not an object");
        t.query = norm(tj, "query", twhere);
        t.expected_answer = norm(tj, "answer", twhere);
        t.original_answer = norm_opt(tj, "original_answer", twhere);
        entry.tests.emplace(kind, std::move(t));
    }

    auto violations = validate_entry(entry);
    if (!violations.empty())
        throw ValidationError(where + ": " + util::join(violations, "; "));
    return entry;
}

std::vector<UnifiedEntry> read_entries(std::istream& in, const std::string& source_name) {
    std::vector<UnifiedEntry> entries;
    std::set<std::string> seen_ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (util::trim(line).empty()) continue;
        UnifiedEntry entry;
        try {
            entry = entry_from_line(line);
        } catch (const ValidationError& e) {
            throw ValidationError(source_name + " line " + std::to_string(lineno) + ": " + e.what());
        } catch (const ParseError& e) {
            throw ParseError(source_name + " line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!seen_ids.insert(entry.id).second)
            throw ValidationError(source_name + " line " + std::to_string(lineno) +
                                  ": duplicate id '" + entry.id + "'");
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<UnifiedEntry> read_entries(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error("cannot open dataset file: " + file.string());
    return read_entries(in, file.filename().string());
}

void write_entries(const std::vector<UnifiedEntry>& entries, std::ostream& out) {
    for (const auto& entry : entries) out << entry_to_line(entry) << '\n';
}

void write_entries(const std::vector<UnifiedEntry>& entries, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write dataset file: " + file.string());
    write_entries(entries, out);
    if (!out) throw Error("short write: " + file.string());
}

}  // namespace mike::core
