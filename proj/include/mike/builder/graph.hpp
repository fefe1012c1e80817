#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mike/core/types.hpp"

namespace mike::builder {

struct KnowledgeTriple {
    std::string subject;
    std::string relation;
    std::string object;

    bool operator==(const KnowledgeTriple&) const = default;
};

// Immutable once built; the index is exactly the projection of the triples.
class KnowledgeGraph {
public:
    static KnowledgeGraph from_triples(std::vector<KnowledgeTriple> triples);

    // Outgoing (relation, object) pairs, sorted lexicographically.
    std::span<const std::pair<std::string, std::string>> outgoing(const std::string& subject) const;
    const std::vector<KnowledgeTriple>& triples() const { return triples_; }

private:
    std::vector<KnowledgeTriple> triples_;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> index_;
};

struct QueryTemplate {
    std::string relation;
    std::string pattern;  // contains "{subject}" exactly once
};

// Lines of "relation<TAB>pattern".
std::vector<QueryTemplate> load_templates(const std::filesystem::path& file);

// Composes the edit with one outgoing edge of the NEW object: the hop
// (r2, C) is the lexicographically smallest pair, the question applies r2's
// template to "the <r1> of <subject>", and the answer is C. Throws
// NoHopAvailableError / MissingTemplateError.
core::TestQuery one_hop_portability(const KnowledgeGraph& graph, const core::KnowledgeFact& edit,
                                    const KnowledgeTriple& edited_triple,
                                    std::span<const QueryTemplate> templates);

}  // namespace mike::builder
