#pragma once

#include <span>

#include "mike/core/types.hpp"

namespace mike::builder {

// Token unit: whitespace split of the raw (untokenized) text.
struct CorpusStats {
    core::TaskId task = core::TaskId::Zsre;
    std::size_t count = 0;
    double q_len = 0.0;  // mean tokens of the reliability query, 2 decimals
    double a_len = 0.0;  // mean tokens of its expected answer, 2 decimals
};

// Requires a non-empty, single-task entry list.
CorpusStats corpus_stats(std::span<const core::UnifiedEntry> entries);

}  // namespace mike::builder
