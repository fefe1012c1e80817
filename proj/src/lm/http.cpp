#include "mike/lm/http.hpp"

#include "json.hpp"
#include "mike/errors.hpp"
#include "mike/util/http.hpp"

namespace mike::lm {

namespace {
using json = nlohmann::json;
}

HttpLmClient::HttpLmClient(Options options) : options_(std::move(options)) {
    if (options_.base_url.empty()) options_.base_url = util::env_or_empty("MIKE_LM_BASE_URL");
    if (options_.base_url.empty())
        throw ValidationError("LM backend: no base URL (set MIKE_LM_BASE_URL or config)");
}

core::ScoredCompletion HttpLmClient::generate(const std::string& prompt,
                                              const GenerationParams& params) {
    json body;
    body["model"] = options_.model;
    body["messages"] = json::array({json{{"role", "user"}, {"content", prompt}}});
    body["temperature"] = params.temperature;
    body["top_p"] = params.top_p;
    body["max_tokens"] = params.max_length;
    if (!params.stop_sequences.empty()) body["stop"] = params.stop_sequences;

    std::vector<std::pair<std::string, std::string>> headers;
    std::string key = util::env_or_empty("MIKE_LM_API_KEY");
    if (!key.empty()) headers.emplace_back("Authorization", "Bearer " + key);
    // Lets the server deduplicate retried requests.
    headers.emplace_back("Idempotency-Key", "mike-gen-" + prompt_fingerprint_hex(prompt));

    util::HttpOptions opts{options_.max_attempts, options_.backoff_ms};
    std::string resp = util::post_json_with_retry(options_.base_url, "/v1/chat/completions",
                                                  body.dump(), headers, opts);
    json j = json::parse(resp);
    if (j.contains("error"))
        throw Error("LM backend error: " + j["error"].dump());
    if (!j.contains("choices") || j["choices"].empty())
        throw ParseError("chat completion response without choices");
    const json& choice = j["choices"][0];

    core::ScoredCompletion out;
    out.text = choice.at("message").at("content").get<std::string>();
    if (choice.contains("logprobs") && choice["logprobs"].is_object() &&
        choice["logprobs"].contains("content")) {
        for (const auto& t : choice["logprobs"]["content"]) {
            double lp = t.at("logprob").get<double>();
            out.tokens.push_back({t.at("token").get<std::string>(), std::min(lp, 0.0)});
        }
    }
    out.text = apply_stop_sequences(std::move(out.text), params.stop_sequences);
    return out;
}

ScoreResult HttpLmClient::score_continuation(const std::string& prompt,
                                             const std::string& continuation) {
    if (continuation.empty())
        throw ValidationError("score_continuation: empty continuation");
    if (!options_.scoring_supported)
        throw CapabilityUnsupportedError("backend '" + options_.model +
                                         "' configured without echo/logprobs scoring");

    json body;
    body["model"] = options_.model;
    body["prompt"] = prompt + continuation;
    body["max_tokens"] = 0;
    body["echo"] = true;
    body["logprobs"] = 1;

    std::vector<std::pair<std::string, std::string>> headers;
    std::string key = util::env_or_empty("MIKE_LM_API_KEY");
    if (!key.empty()) headers.emplace_back("Authorization", "Bearer " + key);
    headers.emplace_back("Idempotency-Key",
                         "mike-score-" + prompt_fingerprint_hex(prompt + "\x1f" + continuation));

    util::HttpOptions opts{options_.max_attempts, options_.backoff_ms};
    std::string resp = util::post_json_with_retry(options_.base_url, "/v1/completions",
                                                  body.dump(), headers, opts);
    json j = json::parse(resp);
    if (j.contains("error")) {
        std::string msg = j["error"].dump();
        if (msg.find("echo") != std::string::npos || msg.find("logprobs") != std::string::npos)
            throw CapabilityUnsupportedError("backend rejected echo/logprobs scoring: " + msg);
        throw Error("LM backend error: " + msg);
    }
    if (!j.contains("choices") || j["choices"].empty())
        throw ParseError("completion response without choices");
    const json& lp = j["choices"][0].at("logprobs");
    const auto& tokens = lp.at("tokens");
    const auto& token_logprobs = lp.at("token_logprobs");
    const auto& offsets = lp.at("text_offset");
    if (tokens.size() != token_logprobs.size() || tokens.size() != offsets.size())
        throw ParseError("completion logprobs arrays disagree in length");

    ScoreResult result;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (offsets[i].get<std::size_t>() < prompt.size()) continue;  // prompt echo
        if (token_logprobs[i].is_null())
            throw CapabilityUnsupportedError("backend returned null logprob for scored token");
        double v = std::min(token_logprobs[i].get<double>(), 0.0);
        result.tokens.push_back({tokens[i].get<std::string>(), v});
        result.total_logprob += v;
    }
    if (result.tokens.empty())
        throw ParseError("no continuation tokens scored (offset bookkeeping mismatch)");
    return result;
}

}  // namespace mike::lm
