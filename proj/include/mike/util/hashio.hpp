#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace mike::util {

std::string sha256_hex(std::string_view bytes);
std::string sha256_file_hex(const std::filesystem::path& file);

// Write-then-rename so readers never observe a half-written file.
void atomic_write(const std::filesystem::path& file, std::string_view content);

std::string read_file(const std::filesystem::path& file);

}  // namespace mike::util
