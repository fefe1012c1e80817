#include "mike/metrics/metrics.hpp"

#include <map>

#include "mike/errors.hpp"
#include "mike/text/unicode.hpp"
#include "mike/util/strings.hpp"

namespace mike::metrics {

std::string_view to_tag(MetricName name) {
    switch (name) {
        case MetricName::F1: return "f1";
        case MetricName::EM: return "em";
        case MetricName::S: return "s";
        case MetricName::M: return "m";
    }
    throw Error("unreachable metric name");
}

MetricName parse_metric(std::string_view tag) {
    if (tag == "f1") return MetricName::F1;
    if (tag == "em") return MetricName::EM;
    if (tag == "s") return MetricName::S;
    if (tag == "m") return MetricName::M;
    throw ValidationError("unknown metric tag: '" + std::string(tag) + "'");
}

const std::set<std::string>& default_char_fallback_langs() {
    static const std::set<std::string> langs = {"zh-cn", "ja", "th"};
    return langs;
}

std::string normalize_answer(std::string_view txt, const core::LanguageCode& lang) {
    (void)lang;  // the fold is language-independent; lang kept for interface symmetry
    return text::fold_for_match(txt);
}

std::vector<std::string> tokenize_for_f1(std::string_view normalized,
                                         const core::LanguageCode& lang) {
    return tokenize_for_f1(normalized, lang, default_char_fallback_langs());
}

std::vector<std::string> tokenize_for_f1(std::string_view normalized,
                                         const core::LanguageCode& lang,
                                         const std::set<std::string>& char_fallback_langs) {
    auto tokens = util::split_ws(normalized);
    if (tokens.size() == 1 && char_fallback_langs.count(lang.str()))
        return text::codepoints(tokens[0]);
    return tokens;
}

double token_f1(std::string_view predicted, std::string_view gold,
                const core::LanguageCode& lang) {
    auto pred = tokenize_for_f1(normalize_answer(predicted, lang), lang);
    auto gd = tokenize_for_f1(normalize_answer(gold, lang), lang);
    if (pred.empty() || gd.empty()) return pred.empty() && gd.empty() ? 1.0 : 0.0;

    std::map<std::string, std::size_t> gold_counts;
    for (const auto& t : gd) ++gold_counts[t];
    std::size_t overlap = 0;
    for (const auto& t : pred) {
        auto it = gold_counts.find(t);
        if (it != gold_counts.end() && it->second > 0) {
            --it->second;
            ++overlap;
        }
    }
    if (overlap == 0) return 0.0;
    double precision = static_cast<double>(overlap) / static_cast<double>(pred.size());
    double recall = static_cast<double>(overlap) / static_cast<double>(gd.size());
    return 2.0 * precision * recall / (precision + recall);
}

int exact_match(std::string_view predicted, std::string_view gold,
                const core::LanguageCode& lang) {
    return normalize_answer(predicted, lang) == normalize_answer(gold, lang) ? 1 : 0;
}

namespace {
void check_probability(double p, const char* which) {
    if (!(p > 0.0) || p > 1.0)
        throw ValidationError(std::string(which) + " probability out of (0, 1]: " +
                              std::to_string(p));
}
}  // namespace

double perplexity_score(double p_new, double p_old) {
    check_probability(p_new, "new");
    check_probability(p_old, "old");
    return p_new > p_old ? 100.0 : 0.0;
}

double magnitude(double p_new, double p_old) {
    check_probability(p_new, "new");
    check_probability(p_old, "old");
    return 100.0 * (p_new - p_old);
}

MetricValue aggregate(MetricName name, std::span<const double> values) {
    if (values.empty()) throw ValidationError("aggregate over empty value list");
    double sum = 0.0;
    for (double v : values) sum += v;
    return MetricValue{name, sum / static_cast<double>(values.size()), values.size()};
}

}  // namespace mike::metrics
