#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "mike/retrieval/embedding.hpp"

namespace mike::retrieval {

// Binary cache of id -> embedding. Little-endian layout (docs/formats.md):
// magic "MIKEVEC1", u32 dimension, u64 count, count x (u32 id length, id
// bytes), count x dimension float32.
void save_vector_store(const std::filesystem::path& file,
                       const std::map<std::string, EmbeddingVector>& vectors);
std::map<std::string, EmbeddingVector> load_vector_store(const std::filesystem::path& file);

}  // namespace mike::retrieval
