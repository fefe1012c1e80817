#include "mike/core/languages.hpp"

#include <array>

namespace mike::core {

namespace {
constexpr std::array<LanguageInfo, 53> kRegistry = {{
    {"en", "English", "Indo-European (Germanic)"},
    {"af", "Afrikaans", "Indo-European (Germanic)"},
    {"ar", "Arabic", "Semitic"},
    {"az", "Azerbaijani", "Turkic"},
    {"be", "Belarusian", "Slavic"},
    {"bg", "Bulgarian", "Slavic"},
    {"bn", "Bengali", "Indo-European (Indo-Aryan)"},
    {"ca", "Catalan", "Indo-European (Romance)"},
    {"ceb", "Cebuano", "Austronesian"},
    {"cs", "Czech", "Slavic"},
    {"cy", "Welsh", "Indo-European (Celtic)"},
    {"da", "Danish", "Indo-European (Germanic)"},
    {"de", "German", "Indo-European (Germanic)"},
    {"el", "Greek", "Indo-European (Hellenic)"},
    {"es", "Spanish", "Indo-European (Romance)"},
    {"et", "Estonian", "Uralic"},
    {"eu", "Basque", "Isolate"},
    {"fa", "Persian", "Indo-European (Iranian)"},
    {"fi", "Finnish", "Uralic"},
    {"fr", "French", "Indo-European (Romance)"},
    {"ga", "Irish", "Indo-European (Celtic)"},
    {"gl", "Galician", "Indo-European (Romance)"},
    {"he", "Hebrew", "Semitic"},
    {"hi", "Hindi", "Indo-European (Indo-Aryan)"},
    {"hr", "Croatian", "Slavic"},
    {"hu", "Hungarian", "Uralic"},
    {"hy", "Armenian", "Indo-European (Satem)"},
    {"id", "Indonesian", "Austronesian"},
    {"it", "Italian", "Indo-European (Romance)"},
    {"ja", "Japanese", "Isolate"},
    {"ka", "Georgian", "Caucasian"},
    {"ko", "Korean", "Isolate"},
    {"la", "Latin", "Indo-European (Romance)"},
    {"lt", "Lithuanian", "Indo-European (Baltic)"},
    {"lv", "Latvian", "Indo-European (Baltic)"},
    {"ms", "Malay", "Austronesian"},
    {"nl", "Dutch", "Indo-European (Germanic)"},
    {"pl", "Polish", "Slavic"},
    {"pt", "Portuguese", "Indo-European (Romance)"},
    {"ro", "Romanian", "Indo-European (Romance)"},
    {"ru", "Russian", "Slavic"},
    {"sk", "Slovak", "Slavic"},
    {"sl", "Slovenian", "Slavic"},
    {"sq", "Albanian", "Indo-European (Other)"},
    {"sr", "Serbian", "Slavic"},
    {"sv", "Swedish", "Indo-European (Germanic)"},
    {"ta", "Tamil", "Dravidian"},
    {"th", "Thai", "Kra-Dai"},
    {"tr", "Turkish", "Turkic"},
    {"uk", "Ukrainian", "Slavic"},
    {"ur", "Urdu", "Indo-European (Indo-Aryan)"},
    {"vi", "Vietnamese", "Austroasiatic"},
    {"zh-cn", "Chinese", "Sino-Tibetan"},
}};
}  // namespace

std::span<const LanguageInfo> language_registry() { return kRegistry; }

bool is_known_language(std::string_view code) {
    for (const auto& info : kRegistry)
        if (info.code == code) return true;
    return false;
}

}  // namespace mike::core
