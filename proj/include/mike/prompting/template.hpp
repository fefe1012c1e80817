#pragma once

#include <filesystem>
#include <string>

#include "mike/core/types.hpp"

namespace mike::prompting {

// Text blocks with named placeholders {fact_query}, {fact_answer},
// {question}, {answer}. Stored on disk as key = value lines with \n escapes
// (docs/formats.md); "mike-v1" is compiled in and is the canonical contract.
struct TemplateSet {
    std::string id;
    std::string preamble_zero_shot;
    std::string preamble_few_shot;
    std::string demo_block;
    std::string live_block;

    static TemplateSet mike_v1();
    static TemplateSet load(const std::filesystem::path& file);

    // Per-task preamble override hook; mike-v1 uses one wording for all tasks.
    std::string preamble(bool few_shot, core::TaskId task) const;
    std::string render_demo(const core::Demonstration& demo) const;
    std::string render_live(const core::KnowledgeFact& fact, const std::string& question) const;
};

}  // namespace mike::prompting
