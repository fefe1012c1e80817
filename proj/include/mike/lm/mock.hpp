#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mike/lm/client.hpp"

namespace mike::lm {

// Deterministic scripted backend. Script file is line-delimited JSON
// (docs/formats.md): {"fingerprint": hex, "response": text} for generation,
// {"fingerprint": hex, "continuation": text, "logprobs": [...]} for scoring,
// {"default_response": text} for the unscripted-generation fallback.
// Unscripted scoring requests get synthesized per-token log-probs derived
// from FNV-1a of (fingerprint, continuation, index), so whole runs stay
// deterministic without scripting every prompt.
struct MockScript {
    std::map<std::string, std::string> responses;  // fingerprint hex -> text
    std::map<std::pair<std::string, std::string>, std::vector<double>> token_scores;
    std::string default_response;

    static MockScript load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;
};

class MockLmClient : public LmClient {
public:
    explicit MockLmClient(MockScript script, bool scoring_enabled = true)
        : script_(std::move(script)), scoring_enabled_(scoring_enabled) {}

    core::ScoredCompletion generate(const std::string& prompt,
                                    const GenerationParams& params) override;
    ScoreResult score_continuation(const std::string& prompt,
                                   const std::string& continuation) override;
    bool supports_scoring() const override { return scoring_enabled_; }
    std::string name() const override { return "mock"; }

private:
    MockScript script_;
    bool scoring_enabled_;
};

}  // namespace mike::lm
