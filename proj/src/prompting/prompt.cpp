#include "mike/prompting/prompt.hpp"

#include <algorithm>

#include "mike/errors.hpp"

namespace mike::prompting {

using core::Demonstration;
using core::KnowledgeFact;
using core::LanguageCode;
using core::QueryKind;
using core::UnifiedEntry;

std::map<QueryKind, int> PromptConfig::default_mix() {
    return {{QueryKind::Reliability, 1},
            {QueryKind::Generality, 3},
            {QueryKind::Locality, 2},
            {QueryKind::Portability, 2}};
}

void PromptConfig::validate() const {
    if (num_demos < 0) throw ValidationError("prompt config: negative num_demos");
    int sum = 0;
    for (QueryKind kind : core::kAllKinds) {
        auto it = mix.find(kind);
        if (it == mix.end())
            throw ValidationError("prompt config: mix missing kind " +
                                  std::string(core::to_tag(kind)));
        if (it->second < 0) throw ValidationError("prompt config: negative mix count");
        sum += it->second;
    }
    if (sum != num_demos)
        throw ValidationError("prompt config: mix sums to " + std::to_string(sum) +
                              ", num_demos is " + std::to_string(num_demos));
}

void CorpusByLang::add(std::span<const UnifiedEntry> entries) {
    for (const auto& e : entries)
        index_[{core::base_entry_id(e.id), e.language.str()}] = &e;
}

const UnifiedEntry* CorpusByLang::find(const std::string& base_id,
                                       const LanguageCode& lang) const {
    auto it = index_.find({base_id, lang.str()});
    return it == index_.end() ? nullptr : it->second;
}

std::vector<Demonstration> build_demonstrations(std::span<const UnifiedEntry* const> selected,
                                                const PromptConfig& config,
                                                const LanguageCode& source_lang,
                                                const LanguageCode& target_lang,
                                                const CorpusByLang& corpus_by_lang) {
    config.validate();
    std::map<QueryKind, int> counts;
    std::vector<Demonstration> demos;
    demos.reserve(static_cast<std::size_t>(config.num_demos));

    int cycle = 0;
    for (const UnifiedEntry* sel : selected) {
        if (static_cast<int>(demos.size()) == config.num_demos) break;
        int chosen = -1;
        for (int step = 0; step < 4; ++step) {
            int ki = (cycle + step) % 4;
            if (counts[core::kAllKinds[ki]] < config.mix.at(core::kAllKinds[ki])) {
                chosen = ki;
                break;
            }
        }
        if (chosen < 0) break;
        QueryKind kind = core::kAllKinds[chosen];

        std::string base = core::base_entry_id(sel->id);
        const UnifiedEntry* src = corpus_by_lang.find(base, source_lang);
        if (!src) throw MissingCounterpartError(sel->id, source_lang.str());
        const UnifiedEntry* tgt = corpus_by_lang.find(base, target_lang);
        if (!tgt) throw MissingCounterpartError(sel->id, target_lang.str());

        Demonstration d;
        d.kind = kind;
        d.fact = src->edit;
        d.query = tgt->test(kind).query;
        d.answer = tgt->test(kind).expected_answer;
        demos.push_back(std::move(d));
        ++counts[kind];
        cycle = (chosen + 1) % 4;
    }
    if (static_cast<int>(demos.size()) < config.num_demos)
        throw ValidationError("insufficient selected entries: need " +
                              std::to_string(config.num_demos) + " demonstrations, built " +
                              std::to_string(demos.size()) + " from " +
                              std::to_string(selected.size()) + " entries");
    return demos;
}

namespace {

std::string layout(const KnowledgeFact& fact, const std::vector<Demonstration>& demos,
                   const std::string& target_query, const PromptConfig& config,
                   const TemplateSet& templates, core::TaskId task) {
    std::string text = templates.preamble(!demos.empty(), task);
    if (config.order_policy == OrderPolicy::SimilarityAscending) {
        for (auto it = demos.rbegin(); it != demos.rend(); ++it)
            text += templates.render_demo(*it);
    } else {
        for (const auto& d : demos) text += templates.render_demo(d);
    }
    text += templates.render_live(fact, target_query);
    return text;
}

// Largest-count kind loses a demo; ties prefer G, then L, P, R.
QueryKind pick_kind_to_shrink(const std::vector<Demonstration>& demos) {
    std::map<QueryKind, int> counts;
    for (const auto& d : demos) ++counts[d.kind];
    const QueryKind preference[4] = {QueryKind::Generality, QueryKind::Locality,
                                     QueryKind::Portability, QueryKind::Reliability};
    QueryKind best = preference[0];
    int best_count = -1;
    for (QueryKind kind : preference)
        if (counts[kind] > best_count) {
            best = kind;
            best_count = counts[kind];
        }
    return best;
}

}  // namespace

AssembledPrompt assemble(const KnowledgeFact& fact, std::span<const Demonstration> demos_ranked,
                         const std::string& target_query, const PromptConfig& config,
                         const TemplateSet& templates, core::TaskId task) {
    std::vector<Demonstration> demos(demos_ranked.begin(), demos_ranked.end());
    for (;;) {
        std::string text = layout(fact, demos, target_query, config, templates, task);
        if (text.size() <= config.context_limit) {
            AssembledPrompt p;
            p.text = std::move(text);
            p.demo_count = static_cast<int>(demos.size());
            p.mode = demos.empty() ? PromptMode::ZeroShot : PromptMode::FewShot;
            p.target_query = target_query;
            return p;
        }
        if (demos.empty()) throw ContextOverflowError(text.size(), config.context_limit);
        QueryKind shrink = pick_kind_to_shrink(demos);
        for (auto it = demos.rbegin(); it != demos.rend(); ++it)
            if (it->kind == shrink) {
                demos.erase(std::next(it).base());
                break;
            }
    }
}

}  // namespace mike::prompting
