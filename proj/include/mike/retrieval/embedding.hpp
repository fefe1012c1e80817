#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mike::retrieval {

struct EmbeddingVector {
    std::vector<float> values;
    std::size_t dimension() const { return values.size(); }
    bool is_zero() const;
};

// dot(a,b) / (|a||b|), accumulated in double. Throws on dimension mismatch or
// zero vectors.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual std::vector<EmbeddingVector> embed(std::span<const std::string> texts) = 0;
    virtual std::string name() const = 0;
};

// Deterministic offline embedder: whitespace tokens hashed (FNV-1a) into a
// fixed-dimension bag-of-words count vector. No network.
class MockHashEmbedder : public EmbeddingProvider {
public:
    explicit MockHashEmbedder(std::size_t dimension = 16) : dimension_(dimension) {}
    std::vector<EmbeddingVector> embed(std::span<const std::string> texts) override;
    std::string name() const override { return "mock-hash"; }

private:
    std::size_t dimension_;
};

// POST {"input": [texts], "model": name} -> {"data": [{"embedding": [...]}]};
// API key read from MIKE_EMBED_API_KEY.
class HttpEmbeddingProvider : public EmbeddingProvider {
public:
    HttpEmbeddingProvider(std::string base_url, std::string model, int max_attempts = 3);
    std::vector<EmbeddingVector> embed(std::span<const std::string> texts) override;
    std::string name() const override { return "http:" + model_; }

private:
    std::string base_url_;
    std::string model_;
    int max_attempts_;
};

}  // namespace mike::retrieval
