#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mike/core/types.hpp"

namespace mike::builder {

class Translator {
public:
    virtual ~Translator() = default;
    virtual std::string translate(const std::string& text, const std::string& source,
                                  const std::string& target) = 0;
    virtual std::string name() const = 0;
};

class IdentityTranslator : public Translator {
public:
    std::string translate(const std::string& text, const std::string&,
                          const std::string&) override {
        return text;
    }
    std::string name() const override { return "identity"; }
};

// Pseudo-localizer: reverses code-point order per field. Deterministic and
// obviously non-English, which is all offline tests need.
class ReverseTranslator : public Translator {
public:
    std::string translate(const std::string& text, const std::string&,
                          const std::string&) override;
    std::string name() const override { return "reverse"; }
};

// POST {"q": text, "source": ..., "target": ...} -> {"text": ...};
// API key read from MIKE_TRANSLATE_API_KEY.
class HttpTranslator : public Translator {
public:
    explicit HttpTranslator(std::string base_url, int max_attempts = 3);
    std::string translate(const std::string& text, const std::string& source,
                          const std::string& target) override;
    std::string name() const override { return "http"; }

private:
    std::string base_url_;
    int max_attempts_;
};

// "identity" | "reverse" | "http" (http requires base_url).
std::unique_ptr<Translator> make_translator(const std::string& backend,
                                            const std::string& base_url = "");

// Structural translation of English base entries into the target language:
// every text field translated independently, ids suffixed "-<target>",
// structure untouched. Atomic: any per-entry failure suppresses all output
// and surfaces an error listing the failing entries.
std::vector<core::UnifiedEntry> expand_language(std::span<const core::UnifiedEntry> entries,
                                                const core::LanguageCode& target,
                                                Translator& translator,
                                                std::size_t max_in_flight = 4);

}  // namespace mike::builder
