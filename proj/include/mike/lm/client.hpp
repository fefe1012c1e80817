#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mike/core/types.hpp"

namespace mike::lm {

struct GenerationParams {
    double temperature = 0.6;
    double top_p = 0.9;
    int max_length = 4096;
    std::vector<std::string> stop_sequences;
};

struct ScoreResult {
    std::vector<core::TokenLogprob> tokens;
    double total_logprob = 0.0;
};

class LmClient {
public:
    virtual ~LmClient() = default;
    virtual core::ScoredCompletion generate(const std::string& prompt,
                                            const GenerationParams& params) = 0;
    // Teacher-forced log-probability of continuation given prompt. Throws
    // CapabilityUnsupportedError when the backend cannot score.
    virtual ScoreResult score_continuation(const std::string& prompt,
                                           const std::string& continuation) = 0;
    virtual bool supports_scoring() const = 0;
    virtual std::string name() const = 0;
};

// 64-bit FNV-1a over the UTF-8 prompt bytes; mock scripts key on its
// lowercase 16-digit hex form.
std::uint64_t prompt_fingerprint(std::string_view prompt);
std::string prompt_fingerprint_hex(std::string_view prompt);

// Per-token geometric-mean probability, exp(mean log p): length-normalized so
// multi-token answers compare fairly. Requires non-empty, all <= 0.
double normalized_probability(std::span<const double> token_logprobs);

// Generated text -> bare answer span: first line, minus a leading "Answer:"
// echo and surrounding quotes/whitespace.
std::string extract_answer(std::string_view generated);

// Truncate at the first occurrence of any stop sequence.
std::string apply_stop_sequences(std::string text, std::span<const std::string> stops);

}  // namespace mike::lm
