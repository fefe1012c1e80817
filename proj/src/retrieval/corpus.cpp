#include "mike/retrieval/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mike/errors.hpp"
#include "mike/retrieval/vector_store.hpp"

namespace mike::retrieval {

std::string fact_text(const core::UnifiedEntry& entry) {
    return entry.edit.query + " " + entry.edit.new_answer;
}

DemoCorpus DemoCorpus::from_entries(std::vector<core::UnifiedEntry> entries) {
    DemoCorpus corpus;
    corpus.records.reserve(entries.size());
    for (auto& e : entries) corpus.records.push_back(DemoRecord{std::move(e), std::nullopt});
    return corpus;
}

bool DemoCorpus::embedded() const {
    if (records.empty()) return false;
    std::size_t dim = 0;
    for (const auto& r : records) {
        if (!r.vector) return false;
        if (dim == 0) dim = r.vector->dimension();
        if (r.vector->dimension() != dim) return false;
    }
    return true;
}

void DemoCorpus::check_embedded() const {
    if (records.empty()) throw EmptyCorpusError();
    if (!embedded()) throw ValidationError("corpus is not embedded (or dimensions disagree)");
}

std::vector<Scored> select_search(const DemoCorpus& corpus, const EmbeddingVector& fact_embedding,
                                  std::size_t k) {
    corpus.check_embedded();
    if (k > corpus.size())
        throw ValidationError("select_search: k=" + std::to_string(k) + " exceeds corpus size " +
                              std::to_string(corpus.size()));
    std::vector<Scored> scored;
    scored.reserve(corpus.size());
    for (const auto& r : corpus.records)
        scored.push_back(Scored{&r.entry, cosine(fact_embedding, *r.vector)});
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.similarity != b.similarity) return a.similarity > b.similarity;
        return a.entry->id < b.entry->id;
    });
    scored.resize(k);
    return scored;
}

std::vector<const core::UnifiedEntry*> select_random(const DemoCorpus& corpus, std::size_t k,
                                                     std::uint64_t seed) {
    if (corpus.records.empty()) throw EmptyCorpusError();
    if (k > corpus.size())
        throw ValidationError("select_random: k=" + std::to_string(k) + " exceeds corpus size " +
                              std::to_string(corpus.size()));
    std::vector<const core::UnifiedEntry*> pool;
    pool.reserve(corpus.size());
    for (const auto& r : corpus.records) pool.push_back(&r.entry);
    std::sort(pool.begin(), pool.end(),
              [](const auto* a, const auto* b) { return a->id < b->id; });

    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(gen() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

DemoCorpus embed_corpus(DemoCorpus corpus, EmbeddingProvider& provider,
                        const std::optional<std::filesystem::path>& store_file,
                        std::size_t batch_size) {
    if (corpus.records.empty()) throw EmptyCorpusError();

    std::map<std::string, EmbeddingVector> cached;
    if (store_file && std::filesystem::exists(*store_file))
        cached = load_vector_store(*store_file);

    std::size_t dim = 0;
    auto note_dim = [&dim](const EmbeddingVector& v, const std::string& id) {
        if (v.values.empty() || v.is_zero())
            throw ValidationError("embedding for '" + id + "' is zero or empty");
        if (dim == 0) dim = v.dimension();
        if (v.dimension() != dim)
            throw ValidationError("embedding dimension inconsistency: got " +
                                  std::to_string(v.dimension()) + ", expected " +
                                  std::to_string(dim) + " (id '" + id + "')");
    };

    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < corpus.records.size(); ++i) {
        auto& r = corpus.records[i];
        if (r.vector) {
            note_dim(*r.vector, r.entry.id);
            continue;
        }
        auto it = cached.find(r.entry.id);
        if (it != cached.end()) {
            note_dim(it->second, r.entry.id);
            r.vector = it->second;
        } else {
            missing.push_back(i);
        }
    }

    for (std::size_t start = 0; start < missing.size(); start += batch_size) {
        std::size_t end = std::min(start + batch_size, missing.size());
        std::vector<std::string> texts;
        texts.reserve(end - start);
        for (std::size_t m = start; m < end; ++m)
            texts.push_back(fact_text(corpus.records[missing[m]].entry));
        auto vectors = provider.embed(texts);
        if (vectors.size() != texts.size())
            throw ValidationError("provider returned " + std::to_string(vectors.size()) +
                                  " vectors for " + std::to_string(texts.size()) + " texts");
        for (std::size_t m = start; m < end; ++m) {
            auto& r = corpus.records[missing[m]];
            note_dim(vectors[m - start], r.entry.id);
            r.vector = std::move(vectors[m - start]);
        }
    }

    if (store_file) {
        std::map<std::string, EmbeddingVector> all;
        for (const auto& r : corpus.records) all.emplace(r.entry.id, *r.vector);
        save_vector_store(*store_file, all);
    }
    return corpus;
}

}  // namespace mike::retrieval
