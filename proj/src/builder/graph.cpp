#include "mike/builder/graph.hpp"

#include <algorithm>
#include <fstream>

#include "mike/errors.hpp"
#include "mike/util/strings.hpp"

namespace mike::builder {

KnowledgeGraph KnowledgeGraph::from_triples(std::vector<KnowledgeTriple> triples) {
    KnowledgeGraph g;
    for (const auto& t : triples) {
        if (t.subject.empty() || t.relation.empty() || t.object.empty())
            throw ValidationError("knowledge triple with empty field");
        g.index_[t.subject].emplace_back(t.relation, t.object);
    }
    for (auto& [subject, edges] : g.index_) std::sort(edges.begin(), edges.end());
    g.triples_ = std::move(triples);
    return g;
}

std::span<const std::pair<std::string, std::string>> KnowledgeGraph::outgoing(
    const std::string& subject) const {
    auto it = index_.find(subject);
    if (it == index_.end()) return {};
    return it->second;
}

std::vector<QueryTemplate> load_templates(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open template file: " + file.string());
    std::vector<QueryTemplate> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (util::trim(line).empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(file.string() + " line " + std::to_string(lineno) +
                             ": expected relation<TAB>pattern");
        QueryTemplate t{util::trim(line.substr(0, tab)), util::trim(line.substr(tab + 1))};
        if (util::count_occurrences(t.pattern, "{subject}") != 1)
            throw ValidationError(file.string() + " line " + std::to_string(lineno) +
                                  ": pattern must contain {subject} exactly once");
        out.push_back(std::move(t));
    }
    return out;
}

core::TestQuery one_hop_portability(const KnowledgeGraph& graph, const core::KnowledgeFact& edit,
                                    const KnowledgeTriple& edited_triple,
                                    std::span<const QueryTemplate> templates) {
    auto edges = graph.outgoing(edited_triple.object);
    if (edges.empty()) throw NoHopAvailableError(edited_triple.object);
    const auto& [hop_relation, hop_object] = edges.front();  // sorted; smallest pair wins

    const QueryTemplate* tmpl = nullptr;
    for (const auto& t : templates)
        if (t.relation == hop_relation) {
            tmpl = &t;
            break;
        }
    if (!tmpl) throw MissingTemplateError(hop_relation);

    (void)edit;
    std::string descriptor = "the " + edited_triple.relation + " of " + edited_triple.subject;
    core::TestQuery q;
    q.kind = core::QueryKind::Portability;
    q.query = util::replace_all(tmpl->pattern, "{subject}", descriptor);
    q.expected_answer = hop_object;
    return q;
}

}  // namespace mike::builder
