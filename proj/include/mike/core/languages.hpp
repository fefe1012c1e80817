#pragma once

#include <span>
#include <string_view>

namespace mike::core {

struct LanguageInfo {
    std::string_view code;
    std::string_view name;
    std::string_view family;
};

// The 53-language set: English plus the 52 benchmark target languages.
// `zh-cn` is the only code containing a hyphen.
std::span<const LanguageInfo> language_registry();

bool is_known_language(std::string_view code);

}  // namespace mike::core
