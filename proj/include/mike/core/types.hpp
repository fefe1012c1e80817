#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mike::core {

enum class TaskId { Zsre, Counterfact, Wfd };

enum class QueryKind { Reliability, Generality, Locality, Portability };

// The four kinds in canonical order (serialization, prompt mix, reports).
inline constexpr QueryKind kAllKinds[4] = {QueryKind::Reliability, QueryKind::Generality,
                                           QueryKind::Locality, QueryKind::Portability};

std::string_view to_tag(TaskId task);
std::string_view to_tag(QueryKind kind);
TaskId parse_task(std::string_view tag);       // throws ValidationError on unknown tag
QueryKind parse_kind(std::string_view tag);    // throws ValidationError on unknown tag

// A language code from the bundled 53-language registry.
class LanguageCode {
public:
    LanguageCode() = default;  // empty; flagged by validation
    static LanguageCode parse(std::string_view code);  // throws on unknown code
    const std::string& str() const { return code_; }
    bool empty() const { return code_.empty(); }
    auto operator<=>(const LanguageCode&) const = default;

private:
    explicit LanguageCode(std::string code) : code_(std::move(code)) {}
    std::string code_;
};

// An edited fact: query houses the question/cloze form, new_answer the
// post-edit target. old_answer is the pre-edit object where the source
// dataset has one (CounterFact, WFD).
struct KnowledgeFact {
    std::string query;
    std::string new_answer;
    std::optional<std::string> old_answer;
    LanguageCode language;

    bool operator==(const KnowledgeFact&) const = default;
};

// expected_answer is the post-edit gold; for locality it equals the unedited
// answer. original_answer houses the competing answer scored against it by
// the S/M metrics, where the source dataset provides one.
struct TestQuery {
    QueryKind kind = QueryKind::Reliability;
    std::string query;
    std::string expected_answer;
    std::optional<std::string> original_answer;

    bool operator==(const TestQuery&) const = default;
};

struct UnifiedEntry {
    std::string id;
    TaskId task = TaskId::Zsre;
    LanguageCode language;
    KnowledgeFact edit;
    std::map<QueryKind, TestQuery> tests;

    const TestQuery& test(QueryKind kind) const;  // throws if absent
    bool operator==(const UnifiedEntry&) const = default;
};

// One in-context example: a source-language fact with a target-language
// query/answer pair illustrating one of the four behaviors.
struct Demonstration {
    QueryKind kind = QueryKind::Reliability;
    KnowledgeFact fact;      // source language
    std::string query;       // target language
    std::string answer;      // target language
};

struct TokenLogprob {
    std::string token;
    double logprob = 0.0;  // natural-log units, <= 0
};

struct ScoredCompletion {
    std::string text;
    std::vector<TokenLogprob> tokens;  // empty when the backend gave no logprobs
};

// Entry ids: "<task>-<6-digit zero-padded source index>" for English base
// data, with "-<lang>" appended for translated counterparts.
std::string make_entry_id(TaskId task, std::size_t source_index,
                          const std::string& lang_suffix = "");
// Strips the language suffix if present: "zsre-000123-zh-cn" -> "zsre-000123".
std::string base_entry_id(const std::string& id);

// Empty list iff every UnifiedEntry invariant holds; each violation names the
// field and rule. Violations are data, not failures.
std::vector<std::string> validate_entry(const UnifiedEntry& entry);

// Metric-selection rule needed by validation: true when (task, kind) is
// scored with S/M and therefore requires original_answer.
bool uses_probability_metrics(TaskId task, QueryKind kind);

}  // namespace mike::core
