#include "mike/lm/mock.hpp"

#include <fstream>

#include "json.hpp"
#include "mike/errors.hpp"
#include "mike/util/fnv.hpp"
#include "mike/util/strings.hpp"

namespace mike::lm {

namespace {
using ojson = nlohmann::ordered_json;
}

MockScript MockScript::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open mock script: " + file.string());
    MockScript script;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (util::trim(line).empty()) continue;
        ojson j;
        try {
            j = ojson::parse(line);
        } catch (const ojson::exception& e) {
            throw ParseError(file.string() + " line " + std::to_string(lineno) + ": " + e.what());
        }
        if (j.contains("default_response")) {
            script.default_response = j.at("default_response").get<std::string>();
        } else if (j.contains("continuation")) {
            std::vector<double> lps = j.at("logprobs").get<std::vector<double>>();
            for (double lp : lps)
                if (lp > 0.0)
                    throw ValidationError(file.string() + " line " + std::to_string(lineno) +
                                          ": positive log-prob");
            script.token_scores[{j.at("fingerprint").get<std::string>(),
                                 j.at("continuation").get<std::string>()}] = std::move(lps);
        } else if (j.contains("response")) {
            script.responses[j.at("fingerprint").get<std::string>()] =
                j.at("response").get<std::string>();
        } else {
            throw ParseError(file.string() + " line " + std::to_string(lineno) +
                             ": unrecognized script record");
        }
    }
    return script;
}

void MockScript::save(const std::filesystem::path& file) const {
    std::ofstream out(file, std::ios::trunc);
    if (!out) throw Error("cannot write mock script: " + file.string());
    if (!default_response.empty()) {
        ojson j;
        j["default_response"] = default_response;
        out << j.dump() << '\n';
    }
    for (const auto& [fp, response] : responses) {
        ojson j;
        j["fingerprint"] = fp;
        j["response"] = response;
        out << j.dump() << '\n';
    }
    for (const auto& [key, lps] : token_scores) {
        ojson j;
        j["fingerprint"] = key.first;
        j["continuation"] = key.second;
        j["logprobs"] = lps;
        out << j.dump() << '\n';
    }
}

core::ScoredCompletion MockLmClient::generate(const std::string& prompt,
                                              const GenerationParams& params) {
    std::string fp = prompt_fingerprint_hex(prompt);
    auto it = script_.responses.find(fp);
    std::string text = it != script_.responses.end() ? it->second : script_.default_response;
    core::ScoredCompletion out;
    out.text = apply_stop_sequences(std::move(text), params.stop_sequences);
    return out;
}

ScoreResult MockLmClient::score_continuation(const std::string& prompt,
                                             const std::string& continuation) {
    if (continuation.empty())
        throw ValidationError("score_continuation: empty continuation");
    if (!scoring_enabled_)
        throw CapabilityUnsupportedError("mock configured without scoring capability");

    std::string fp = prompt_fingerprint_hex(prompt);
    ScoreResult result;
    auto it = script_.token_scores.find({fp, continuation});
    if (it != script_.token_scores.end()) {
        auto tokens = util::split_ws(continuation);
        for (std::size_t i = 0; i < it->second.size(); ++i) {
            std::string tok = i < tokens.size() ? tokens[i] : "";
            result.tokens.push_back({tok, it->second[i]});
            result.total_logprob += it->second[i];
        }
        return result;
    }

    // Synthesized fallback: stable pseudo log-probs in [-2.5, -0.5).
    auto tokens = util::split_ws(continuation);
    if (tokens.empty()) tokens.push_back(continuation);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::uint64_t h =
            util::fnv1a64(fp + "|" + continuation + "|" + std::to_string(i));
        double lp = -0.5 - static_cast<double>(h % 2000) / 1000.0;
        result.tokens.push_back({tokens[i], lp});
        result.total_logprob += lp;
    }
    return result;
}

}  // namespace mike::lm
