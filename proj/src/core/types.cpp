#include "mike/core/types.hpp"

#include <cstdio>

#include "mike/core/languages.hpp"
#include "mike/errors.hpp"
#include "mike/text/unicode.hpp"
#include "mike/util/strings.hpp"

namespace mike::core {

std::string_view to_tag(TaskId task) {
    switch (task) {
        case TaskId::Zsre: return "zsre";
        case TaskId::Counterfact: return "counterfact";
        case TaskId::Wfd: return "wfd";
    }
    throw Error("unreachable task id");
}

std::string_view to_tag(QueryKind kind) {
    switch (kind) {
        case QueryKind::Reliability: return "reliability";
        case QueryKind::Generality: return "generality";
        case QueryKind::Locality: return "locality";
        case QueryKind::Portability: return "portability";
    }
    throw Error("unreachable query kind");
}

TaskId parse_task(std::string_view tag) {
    if (tag == "zsre") return TaskId::Zsre;
    if (tag == "counterfact") return TaskId::Counterfact;
    if (tag == "wfd") return TaskId::Wfd;
    throw ValidationError("unknown task tag: '" + std::string(tag) + "'");
}

QueryKind parse_kind(std::string_view tag) {
    if (tag == "reliability") return QueryKind::Reliability;
    if (tag == "generality") return QueryKind::Generality;
    if (tag == "locality") return QueryKind::Locality;
    if (tag == "portability") return QueryKind::Portability;
    throw ValidationError("unknown query kind tag: '" + std::string(tag) + "'");
}

LanguageCode LanguageCode::parse(std::string_view code) {
    if (!is_known_language(code))
        throw ValidationError("unknown language code: '" + std::string(code) + "'");
    return LanguageCode(std::string(code));
}

const TestQuery& UnifiedEntry::test(QueryKind kind) const {
    auto it = tests.find(kind);
    if (it == tests.end())
        throw Error("entry '" + id + "' has no " + std::string(to_tag(kind)) + " test");
    return it->second;
}

std::string make_entry_id(TaskId task, std::size_t source_index, const std::string& lang_suffix) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%06zu", source_index);
    std::string id = std::string(to_tag(task)) + "-" + buf;
    if (!lang_suffix.empty()) id += "-" + lang_suffix;
    return id;
}

std::string base_entry_id(const std::string& id) {
    // Base shape is <task>-<6 digits>; anything after that is the language
    // suffix (which may itself contain a hyphen, e.g. zh-cn).
    auto dash = id.find('-');
    if (dash == std::string::npos) return id;
    std::size_t digits_end = dash + 1;
    while (digits_end < id.size() && id[digits_end] >= '0' && id[digits_end] <= '9') ++digits_end;
    return id.substr(0, digits_end);
}

bool uses_probability_metrics(TaskId task, QueryKind kind) {
    switch (task) {
        case TaskId::Zsre: return false;
        case TaskId::Counterfact: return kind != QueryKind::Portability;
        case TaskId::Wfd:
            return kind == QueryKind::Reliability || kind == QueryKind::Generality;
    }
    return false;
}

std::vector<std::string> validate_entry(const UnifiedEntry& entry) {
    std::vector<std::string> v;
    if (util::trim(entry.id).empty()) v.push_back("id: empty");
    if (entry.language.empty())
        v.push_back("language: empty");
    if (entry.edit.language != entry.language) v.push_back("edit.language mismatch");
    if (util::trim(entry.edit.query).empty()) v.push_back("edit.query: empty");
    if (util::trim(entry.edit.new_answer).empty()) v.push_back("edit.new_answer: empty");
    if (entry.edit.old_answer &&
        text::fold_for_match(*entry.edit.old_answer) == text::fold_for_match(entry.edit.new_answer))
        v.push_back("edit.old_answer: equals new_answer under EM-normalization");

    for (QueryKind kind : kAllKinds) {
        auto it = entry.tests.find(kind);
        if (it == entry.tests.end()) {
            v.push_back("tests: missing kind " + std::string(to_tag(kind)));
            continue;
        }
        const TestQuery& t = it->second;
        std::string prefix = "tests[" + std::string(to_tag(kind)) + "]";
        if (t.kind != kind) v.push_back(prefix + ".kind: mismatch");
        if (util::trim(t.query).empty()) v.push_back(prefix + ".query: empty");
        if (util::trim(t.expected_answer).empty()) v.push_back(prefix + ".answer: empty");
        if (!t.original_answer && uses_probability_metrics(entry.task, kind))
            v.push_back(prefix + ".original_answer: required for task " +
                        std::string(to_tag(entry.task)));
    }
    if (entry.tests.size() > 4) v.push_back("tests: unexpected extra kinds");
    return v;
}

}  // namespace mike::core
