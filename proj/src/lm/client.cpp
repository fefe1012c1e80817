#include "mike/lm/client.hpp"

#include <cmath>

#include "mike/errors.hpp"
#include "mike/util/fnv.hpp"
#include "mike/util/strings.hpp"

namespace mike::lm {

std::uint64_t prompt_fingerprint(std::string_view prompt) { return util::fnv1a64(prompt); }

std::string prompt_fingerprint_hex(std::string_view prompt) {
    return util::to_hex64(prompt_fingerprint(prompt));
}

double normalized_probability(std::span<const double> token_logprobs) {
    if (token_logprobs.empty())
        throw ValidationError("normalized_probability: empty log-prob list");
    double sum = 0.0;
    for (double lp : token_logprobs) {
        if (lp > 0.0)
            throw ValidationError("normalized_probability: positive log-prob " +
                                  std::to_string(lp));
        sum += lp;
    }
    return std::exp(sum / static_cast<double>(token_logprobs.size()));
}

std::string extract_answer(std::string_view generated) {
    auto nl = generated.find('\n');
    std::string line = util::trim(generated.substr(0, nl));
    const std::string_view prefix = "Answer:";
    if (line.starts_with(prefix)) line = util::trim(std::string_view(line).substr(prefix.size()));

    auto strip_pair = [&line](std::string_view open, std::string_view close) {
        if (line.size() >= open.size() + close.size() && line.starts_with(open) &&
            line.ends_with(close)) {
            line = util::trim(std::string_view(line).substr(
                open.size(), line.size() - open.size() - close.size()));
            return true;
        }
        return false;
    };
    while (strip_pair("\"", "\"") || strip_pair("'", "'") || strip_pair("“", "”")) {
    }
    return line;
}

std::string apply_stop_sequences(std::string text, std::span<const std::string> stops) {
    std::size_t cut = std::string::npos;
    for (const auto& stop : stops) {
        if (stop.empty()) continue;
        auto pos = text.find(stop);
        if (pos != std::string::npos) cut = std::min(cut, pos);
    }
    if (cut != std::string::npos) text.resize(cut);
    return text;
}

}  // namespace mike::lm
