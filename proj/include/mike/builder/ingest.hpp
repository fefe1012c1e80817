#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mike/core/types.hpp"

namespace mike::builder {

struct IngestReport {
    std::vector<core::UnifiedEntry> entries;
    std::vector<std::string> dropped;  // one reason per dropped raw record
    std::size_t dropped_count() const { return dropped.size(); }
};

// Reads the documented per-task raw layout from source_dir (docs/formats.md):
//   zsre/        zsre.json        + zsre_portability.json
//   counterfact/ counterfact.json + counterfact_portability.json
//   wfd/         wfd.json         + wfd_triples.json + templates.tsv
// Emits one English UnifiedEntry per raw record that yields all four test
// queries; records missing any are dropped and counted.
IngestReport ingest(core::TaskId task, const std::filesystem::path& source_dir);

}  // namespace mike::builder
