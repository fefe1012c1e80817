#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mike::util {

// 64-bit FNV-1a. The mock-script fingerprint format depends on this exact
// algorithm; see docs/formats.md.
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string to_hex64(std::uint64_t v);

}  // namespace mike::util
