#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mike/core/types.hpp"

namespace mike::metrics {

enum class MetricName { F1, EM, S, M };

std::string_view to_tag(MetricName name);
MetricName parse_metric(std::string_view tag);

// All values on the 0-100 report scale; M may be negative.
struct MetricValue {
    MetricName name = MetricName::F1;
    double value = 0.0;
    std::size_t count = 0;
};

// Languages whose answers carry no internal spaces; single-segment strings
// fall back to per-character tokens.
const std::set<std::string>& default_char_fallback_langs();

// NFKC fold + casefold, strip category-P* punctuation, collapse internal
// whitespace, trim. No article removal.
std::string normalize_answer(std::string_view txt, const core::LanguageCode& lang);

// Whitespace split of already-normalized text. When the text has no internal
// whitespace and the language is in the fallback set, split into single
// characters instead (whitespace split takes precedence when spaces exist).
std::vector<std::string> tokenize_for_f1(std::string_view normalized,
                                         const core::LanguageCode& lang);
std::vector<std::string> tokenize_for_f1(std::string_view normalized,
                                         const core::LanguageCode& lang,
                                         const std::set<std::string>& char_fallback_langs);

// Multiset-overlap F1 in [0, 1].
double token_f1(std::string_view predicted, std::string_view gold,
                const core::LanguageCode& lang);

// 1 iff the two answers are equal after normalize_answer.
int exact_match(std::string_view predicted, std::string_view gold,
                const core::LanguageCode& lang);

// Item-level S: 100 when p_new strictly exceeds p_old, else 0 (ties score 0).
// Both probabilities are length-normalized per-token values in (0, 1].
double perplexity_score(double p_new, double p_old);

// Item-level M: 100 * (p_new - p_old), in [-100, 100].
double magnitude(double p_new, double p_old);

// Arithmetic mean with contributing count. Feed per-item values for a
// language-level aggregate, or per-language means for the cross-language
// macro average (mean of per-language means, never item-pooled).
MetricValue aggregate(MetricName name, std::span<const double> values);

}  // namespace mike::metrics
