#pragma once

#include <string>

#include "mike/lm/client.hpp"

namespace mike::lm {

// Logprob-capable completion endpoint client. Generation goes through
// POST /v1/chat/completions; teacher-forced scoring through
// POST /v1/completions with echo=true, logprobs=1, max_tokens=0. Base URL
// falls back to MIKE_LM_BASE_URL, the API key to MIKE_LM_API_KEY.
class HttpLmClient : public LmClient {
public:
    struct Options {
        std::string base_url;          // empty -> MIKE_LM_BASE_URL
        std::string model;
        int max_attempts = 3;
        int backoff_ms = 250;
        bool scoring_supported = true;  // set false for chat-only backends
    };

    explicit HttpLmClient(Options options);

    core::ScoredCompletion generate(const std::string& prompt,
                                    const GenerationParams& params) override;
    ScoreResult score_continuation(const std::string& prompt,
                                   const std::string& continuation) override;
    bool supports_scoring() const override { return options_.scoring_supported; }
    std::string name() const override { return "http:" + options_.model; }

private:
    Options options_;
};

}  // namespace mike::lm
