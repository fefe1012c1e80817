#include "mike/builder/stats.hpp"

#include <cmath>

#include "mike/errors.hpp"
#include "mike/util/strings.hpp"

namespace mike::builder {

CorpusStats corpus_stats(std::span<const core::UnifiedEntry> entries) {
    if (entries.empty()) throw EmptyCorpusError();
    CorpusStats stats;
    stats.task = entries.front().task;
    stats.count = entries.size();
    double q_sum = 0.0, a_sum = 0.0;
    for (const auto& e : entries) {
        if (e.task != stats.task)
            throw ValidationError("corpus_stats: mixed tasks in entry list ('" + e.id + "')");
        const auto& r = e.test(core::QueryKind::Reliability);
        q_sum += static_cast<double>(util::split_ws(r.query).size());
        a_sum += static_cast<double>(util::split_ws(r.expected_answer).size());
    }
    auto round2 = [](double v) { return std::round(v * 100.0) / 100.0; };
    stats.q_len = round2(q_sum / static_cast<double>(entries.size()));
    stats.a_len = round2(a_sum / static_cast<double>(entries.size()));
    return stats;
}

}  // namespace mike::builder
