#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "mike/core/types.hpp"
#include "mike/retrieval/embedding.hpp"

namespace mike::retrieval {

// The text encoded per record: the fact the entry edits.
std::string fact_text(const core::UnifiedEntry& entry);

struct DemoRecord {
    core::UnifiedEntry entry;
    std::optional<EmbeddingVector> vector;
};

struct DemoCorpus {
    std::vector<DemoRecord> records;

    static DemoCorpus from_entries(std::vector<core::UnifiedEntry> entries);
    bool embedded() const;
    std::size_t size() const { return records.size(); }
    // Throws unless every record has a vector and all dimensions agree.
    void check_embedded() const;
};

struct Scored {
    const core::UnifiedEntry* entry;
    double similarity;
};

// Exhaustive top-k by cosine, descending; ties broken by entry id ascending.
std::vector<Scored> select_search(const DemoCorpus& corpus, const EmbeddingVector& fact_embedding,
                                  std::size_t k);

// k distinct entries without replacement. Deterministic: records are keyed by
// sorted id, then partially Fisher-Yates shuffled with std::mt19937_64(seed)
// (indices via gen() % remaining), so the draw is invariant under corpus
// reordering. Selection happens once per run; callers reuse the result.
std::vector<const core::UnifiedEntry*> select_random(const DemoCorpus& corpus, std::size_t k,
                                                     std::uint64_t seed);

// Fills missing vectors via the provider (batched); the store file, when
// given, is consulted first and rewritten after, so warm re-runs make zero
// provider calls.
DemoCorpus embed_corpus(DemoCorpus corpus, EmbeddingProvider& provider,
                        const std::optional<std::filesystem::path>& store_file = std::nullopt,
                        std::size_t batch_size = 64);

}  // namespace mike::retrieval
