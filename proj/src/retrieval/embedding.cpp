#include "mike/retrieval/embedding.hpp"

#include <cmath>

#include "json.hpp"
#include "mike/errors.hpp"
#include "mike/util/fnv.hpp"
#include "mike/util/http.hpp"
#include "mike/util/strings.hpp"

namespace mike::retrieval {

bool EmbeddingVector::is_zero() const {
    for (float v : values)
        if (v != 0.0f) return false;
    return true;
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.dimension() != b.dimension())
        throw ValidationError("cosine: dimension mismatch (" + std::to_string(a.dimension()) +
                              " vs " + std::to_string(b.dimension()) + ")");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        dot += static_cast<double>(a.values[i]) * b.values[i];
        na += static_cast<double>(a.values[i]) * a.values[i];
        nb += static_cast<double>(b.values[i]) * b.values[i];
    }
    if (na == 0.0 || nb == 0.0) throw ValidationError("cosine: zero vector");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<EmbeddingVector> MockHashEmbedder::embed(std::span<const std::string> texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        EmbeddingVector v;
        v.values.assign(dimension_, 0.0f);
        for (const auto& token : util::split_ws(text))
            v.values[util::fnv1a64(token) % dimension_] += 1.0f;
        if (v.is_zero()) v.values[0] = 1.0f;  // empty text still embeds
        out.push_back(std::move(v));
    }
    return out;
}

HttpEmbeddingProvider::HttpEmbeddingProvider(std::string base_url, std::string model,
                                             int max_attempts)
    : base_url_(std::move(base_url)), model_(std::move(model)), max_attempts_(max_attempts) {}

std::vector<EmbeddingVector> HttpEmbeddingProvider::embed(std::span<const std::string> texts) {
    nlohmann::json body;
    body["input"] = std::vector<std::string>(texts.begin(), texts.end());
    body["model"] = model_;
    std::vector<std::pair<std::string, std::string>> headers;
    std::string key = util::env_or_empty("MIKE_EMBED_API_KEY");
    if (!key.empty()) headers.emplace_back("Authorization", "Bearer " + key);

    util::HttpOptions opts;
    opts.max_attempts = max_attempts_;
    std::string resp = util::post_json_with_retry(base_url_, "/v1/embeddings", body.dump(),
                                                  headers, opts);
    nlohmann::json j = nlohmann::json::parse(resp);
    if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != texts.size())
        throw ParseError("embedding response: expected 'data' array of " +
                         std::to_string(texts.size()) + " items");
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& item : j["data"]) {
        EmbeddingVector v;
        for (const auto& f : item.at("embedding")) v.values.push_back(f.get<float>());
        if (v.values.empty() || v.is_zero())
            throw ValidationError("embedding response: zero or empty vector");
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace mike::retrieval
