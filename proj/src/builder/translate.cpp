#include "mike/builder/translate.hpp"

#include "json.hpp"
#include "mike/errors.hpp"
#include "mike/text/unicode.hpp"
#include "mike/util/http.hpp"
#include "mike/util/parallel.hpp"
#include "mike/util/strings.hpp"

namespace mike::builder {

std::string ReverseTranslator::translate(const std::string& text, const std::string&,
                                         const std::string&) {
    return text::reverse_codepoints(text);
}

HttpTranslator::HttpTranslator(std::string base_url, int max_attempts)
    : base_url_(std::move(base_url)), max_attempts_(max_attempts) {}

std::string HttpTranslator::translate(const std::string& text, const std::string& source,
                                      const std::string& target) {
    nlohmann::json body{{"q", text}, {"source", source}, {"target", target}};
    std::vector<std::pair<std::string, std::string>> headers;
    std::string key = util::env_or_empty("MIKE_TRANSLATE_API_KEY");
    if (!key.empty()) headers.emplace_back("Authorization", "Bearer " + key);
    util::HttpOptions opts;
    opts.max_attempts = max_attempts_;
    std::string resp = util::post_json_with_retry(base_url_, "/translate", body.dump(), headers, opts);
    nlohmann::json j = nlohmann::json::parse(resp);
    if (!j.contains("text") || !j["text"].is_string())
        throw ParseError("translator response: missing string field 'text'");
    return j["text"].get<std::string>();
}

std::unique_ptr<Translator> make_translator(const std::string& backend,
                                            const std::string& base_url) {
    if (backend == "identity") return std::make_unique<IdentityTranslator>();
    if (backend == "reverse") return std::make_unique<ReverseTranslator>();
    if (backend == "http") {
        if (base_url.empty())
            throw ValidationError("http translator requires an endpoint URL");
        return std::make_unique<HttpTranslator>(base_url);
    }
    throw ValidationError("unknown translator backend: '" + backend + "'");
}

namespace {

core::UnifiedEntry translate_entry(const core::UnifiedEntry& src, const core::LanguageCode& target,
                                   Translator& tr) {
    const std::string& s = src.language.str();
    const std::string& t = target.str();
    auto tx = [&](const std::string& text) { return text::nfc(tr.translate(text, s, t)); };
    auto tx_opt = [&](const std::optional<std::string>& text) -> std::optional<std::string> {
        if (!text) return std::nullopt;
        return tx(*text);
    };

    core::UnifiedEntry out;
    out.id = src.id + "-" + t;
    out.task = src.task;
    out.language = target;
    out.edit.query = tx(src.edit.query);
    out.edit.new_answer = tx(src.edit.new_answer);
    out.edit.old_answer = tx_opt(src.edit.old_answer);
    out.edit.language = target;
    for (const auto& [kind, test] : src.tests) {
        core::TestQuery tq;
        tq.kind = kind;
        tq.query = tx(test.query);
        tq.expected_answer = tx(test.expected_answer);
        tq.original_answer = tx_opt(test.original_answer);
        out.tests.emplace(kind, std::move(tq));
    }
    return out;
}

}  // namespace

std::vector<core::UnifiedEntry> expand_language(std::span<const core::UnifiedEntry> entries,
                                                const core::LanguageCode& target,
                                                Translator& translator,
                                                std::size_t max_in_flight) {
    struct Slot {
        core::UnifiedEntry entry;
        std::string error;
        bool failed = false;
    };
    auto slots = util::parallel_map<Slot>(entries.size(), max_in_flight, [&](std::size_t i) {
        Slot slot;
        try {
            slot.entry = translate_entry(entries[i], target, translator);
        } catch (const std::exception& e) {
            slot.failed = true;
            slot.error = e.what();
        }
        return slot;
    });

    std::vector<std::string> failures;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i].failed)
            failures.push_back("entry '" + entries[i].id + "': " + slots[i].error);
    if (!failures.empty())
        throw Error("expand_language to '" + target.str() + "' failed for " +
                    std::to_string(failures.size()) + " of " + std::to_string(entries.size()) +
                    " entries; no output emitted. " + util::join(failures, " | "));

    std::vector<core::UnifiedEntry> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(s.entry));
    return out;
}

}  // namespace mike::builder
