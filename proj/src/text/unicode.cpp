#include "mike/text/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "mike/errors.hpp"

namespace mike::text {

namespace {

const icu::Normalizer2& nfc_normalizer() {
    UErrorCode ec = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(ec);
    if (U_FAILURE(ec) || n == nullptr) throw Error("ICU NFC normalizer unavailable");
    return *n;
}

const icu::Normalizer2& nfkc_cf_normalizer() {
    UErrorCode ec = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFKCCasefoldInstance(ec);
    if (U_FAILURE(ec) || n == nullptr) throw Error("ICU NFKC_Casefold normalizer unavailable");
    return *n;
}

std::string normalize_with(const icu::Normalizer2& n, std::string_view utf8) {
    icu::UnicodeString in = icu::UnicodeString::fromUTF8(
        icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
    UErrorCode ec = U_ZERO_ERROR;
    icu::UnicodeString out = n.normalize(in, ec);
    if (U_FAILURE(ec)) throw Error("ICU normalization failed");
    std::string result;
    out.toUTF8String(result);
    return result;
}

template <typename Fn>
void for_each_codepoint(std::string_view utf8, Fn&& fn) {
    icu::UnicodeString s = icu::UnicodeString::fromUTF8(
        icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
    for (int32_t i = 0; i < s.length();) {
        UChar32 c = s.char32At(i);
        fn(c);
        i += U16_LENGTH(c);
    }
}

void append_utf8(std::string& out, UChar32 c) {
    icu::UnicodeString one(c);
    one.toUTF8String(out);
}

bool is_punct_cp(UChar32 c) {
    return (U_GET_GC_MASK(c) & U_GC_P_MASK) != 0;
}

bool is_space_cp(UChar32 c) {
    return u_isUWhiteSpace(c) != 0;
}

}  // namespace

std::string nfc(std::string_view utf8) { return normalize_with(nfc_normalizer(), utf8); }

std::string nfkc_casefold(std::string_view utf8) {
    return normalize_with(nfkc_cf_normalizer(), utf8);
}

std::string strip_punctuation(std::string_view utf8) {
    std::string out;
    out.reserve(utf8.size());
    for_each_codepoint(utf8, [&](UChar32 c) {
        if (!is_punct_cp(c)) append_utf8(out, c);
    });
    return out;
}

std::string collapse_whitespace(std::string_view utf8) {
    std::string out;
    out.reserve(utf8.size());
    bool pending_space = false;
    bool seen_any = false;
    for_each_codepoint(utf8, [&](UChar32 c) {
        if (is_space_cp(c)) {
            if (seen_any) pending_space = true;
            return;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        append_utf8(out, c);
        seen_any = true;
    });
    return out;
}

std::string fold_for_match(std::string_view utf8) {
    return collapse_whitespace(strip_punctuation(nfkc_casefold(utf8)));
}

std::vector<std::string> codepoints(std::string_view utf8) {
    std::vector<std::string> out;
    for_each_codepoint(utf8, [&](UChar32 c) {
        std::string one;
        append_utf8(one, c);
        out.push_back(std::move(one));
    });
    return out;
}

std::string reverse_codepoints(std::string_view utf8) {
    auto cps = codepoints(utf8);
    std::string out;
    out.reserve(utf8.size());
    for (auto it = cps.rbegin(); it != cps.rend(); ++it) out += *it;
    return out;
}

}  // namespace mike::text
