#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mike/core/types.hpp"
#include "mike/prompting/template.hpp"

namespace mike::prompting {

enum class OrderPolicy {
    SimilarityAscending,  // most similar demo last, adjacent to the live block
    AsSelected,
};

struct PromptConfig {
    int num_demos = 8;
    std::map<core::QueryKind, int> mix = default_mix();
    OrderPolicy order_policy = OrderPolicy::SimilarityAscending;
    std::string template_id = "mike-v1";
    // UTF-8 bytes; ~4096 tokens at 4 bytes/token.
    std::size_t context_limit = 16384;

    static std::map<core::QueryKind, int> default_mix();  // R:1 G:3 L:2 P:2
    // Throws unless mix covers all four kinds and sums to num_demos.
    void validate() const;
};

enum class PromptMode { ZeroShot, FewShot };

struct AssembledPrompt {
    std::string text;
    int demo_count = 0;
    PromptMode mode = PromptMode::ZeroShot;
    std::string target_query;
};

// Multi-language entry lookup keyed by (base id, language).
class CorpusByLang {
public:
    void add(std::span<const core::UnifiedEntry> entries);
    const core::UnifiedEntry* find(const std::string& base_id, const core::LanguageCode& lang) const;

private:
    std::map<std::pair<std::string, std::string>, const core::UnifiedEntry*> index_;
};

// Fills the mix quotas from the front of the ranked selection, cycling
// R->G->L->P past exhausted kinds. Each demonstration pairs the
// source-language fact with the target-language counterpart's test query and
// answer of the demonstration's kind.
std::vector<core::Demonstration> build_demonstrations(
    std::span<const core::UnifiedEntry* const> selected, const PromptConfig& config,
    const core::LanguageCode& source_lang, const core::LanguageCode& target_lang,
    const CorpusByLang& corpus_by_lang);

// Deterministic text; input demo order is treated as ranking (most relevant
// first). Over the context limit, demos are dropped lowest-rank first from
// the currently largest-count kind (ties prefer G, then L, P, R) before
// ContextOverflowError is raised.
AssembledPrompt assemble(const core::KnowledgeFact& fact,
                         std::span<const core::Demonstration> demos,
                         const std::string& target_query, const PromptConfig& config,
                         const TemplateSet& templates, core::TaskId task);

}  // namespace mike::prompting
