#include "mike/builder/ingest.hpp"

#include <fstream>
#include <map>

#include "json.hpp"
#include "mike/builder/graph.hpp"
#include "mike/errors.hpp"
#include "mike/text/unicode.hpp"
#include "mike/util/strings.hpp"

namespace mike::builder {

namespace {

using json = nlohmann::json;
using core::LanguageCode;
using core::QueryKind;
using core::TaskId;
using core::TestQuery;
using core::UnifiedEntry;

json load_json_array(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open raw dataset file: " + file.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(file.string() + ": " + e.what());
    }
    if (!j.is_array()) throw ParseError(file.string() + ": expected a JSON array");
    return j;
}

// Raw records are dropped (not fatal) when a field is absent or blank.
struct DropRecord : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string need(const json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_string())
        throw DropRecord(std::string("missing field '") + field + "'");
    std::string v = text::nfc(j.at(field).get<std::string>());
    if (util::trim(v).empty()) throw DropRecord(std::string("empty field '") + field + "'");
    return v;
}

TestQuery make_test(QueryKind kind, std::string query, std::string answer,
                    std::optional<std::string> original = std::nullopt) {
    TestQuery t;
    t.kind = kind;
    t.query = std::move(query);
    t.expected_answer = std::move(answer);
    t.original_answer = std::move(original);
    return t;
}

// index -> portability (query, answer) from the extension file.
std::map<std::size_t, std::pair<std::string, std::string>> load_portability_extension(
    const std::filesystem::path& file) {
    if (!std::filesystem::exists(file))
        throw Error("missing portability extension file: " + file.string());
    std::map<std::size_t, std::pair<std::string, std::string>> out;
    for (const auto& rec : load_json_array(file)) {
        if (!rec.contains("index") || !rec.at("index").is_number_unsigned())
            throw ParseError(file.string() + ": extension record without unsigned 'index'");
        std::size_t idx = rec.at("index").get<std::size_t>();
        out[idx] = {text::nfc(rec.at("query").get<std::string>()),
                    text::nfc(rec.at("answer").get<std::string>())};
    }
    return out;
}

UnifiedEntry ingest_zsre_record(const json& rec, std::size_t index,
                                const std::map<std::size_t, std::pair<std::string, std::string>>& port) {
    UnifiedEntry e;
    e.id = core::make_entry_id(TaskId::Zsre, index);
    e.task = TaskId::Zsre;
    e.language = LanguageCode::parse("en");

    std::string src = need(rec, "src");
    std::string alt = need(rec, "alt");
    e.edit.query = src;
    e.edit.new_answer = alt;
    e.edit.language = e.language;

    std::optional<std::string> original;
    if (rec.contains("answers") && rec.at("answers").is_array() && !rec.at("answers").empty() &&
        rec.at("answers")[0].is_string()) {
        std::string first = text::nfc(rec.at("answers")[0].get<std::string>());
        if (!util::trim(first).empty()) original = first;
    }

    e.tests.emplace(QueryKind::Reliability,
                    make_test(QueryKind::Reliability, src, alt, original));
    e.tests.emplace(QueryKind::Generality,
                    make_test(QueryKind::Generality, need(rec, "rephrase"), alt, original));
    e.tests.emplace(QueryKind::Locality,
                    make_test(QueryKind::Locality, need(rec, "loc"), need(rec, "loc-ans")));
    auto it = port.find(index);
    if (it == port.end()) throw DropRecord("no portability extension record");
    e.tests.emplace(QueryKind::Portability,
                    make_test(QueryKind::Portability, it->second.first, it->second.second));
    return e;
}

UnifiedEntry ingest_counterfact_record(
    const json& rec, std::size_t index,
    const std::map<std::size_t, std::pair<std::string, std::string>>& port) {
    UnifiedEntry e;
    e.id = core::make_entry_id(TaskId::Counterfact, index);
    e.task = TaskId::Counterfact;
    e.language = LanguageCode::parse("en");

    if (!rec.contains("requested_rewrite") || !rec.at("requested_rewrite").is_object())
        throw DropRecord("missing object 'requested_rewrite'");
    const json& rw = rec.at("requested_rewrite");
    std::string prompt = need(rw, "prompt");
    std::string subject = need(rw, "subject");
    if (!rw.contains("target_new") || !rw.contains("target_true"))
        throw DropRecord("missing target_new/target_true");
    std::string target_new = need(rw.at("target_new"), "str");
    std::string target_true = need(rw.at("target_true"), "str");
    if (prompt.find("{}") == std::string::npos) throw DropRecord("prompt lacks '{}' placeholder");
    std::string question = util::replace_all(prompt, "{}", subject);

    e.edit.query = question;
    e.edit.new_answer = target_new;
    e.edit.old_answer = target_true;
    e.edit.language = e.language;

    auto first_of = [&](const char* field) -> std::string {
        if (!rec.contains(field) || !rec.at(field).is_array() || rec.at(field).empty() ||
            !rec.at(field)[0].is_string())
            throw DropRecord(std::string("missing '") + field + "'");
        std::string v = text::nfc(rec.at(field)[0].get<std::string>());
        if (util::trim(v).empty()) throw DropRecord(std::string("empty '") + field + "'");
        return v;
    };

    e.tests.emplace(QueryKind::Reliability,
                    make_test(QueryKind::Reliability, question, target_new, target_true));
    e.tests.emplace(QueryKind::Generality,
                    make_test(QueryKind::Generality, first_of("paraphrase_prompts"), target_new,
                              target_true));
    // Neighborhood queries must keep their true answer; the edit answer is
    // the competing string scored against it.
    e.tests.emplace(QueryKind::Locality,
                    make_test(QueryKind::Locality, first_of("neighborhood_prompts"), target_true,
                              target_new));
    auto it = port.find(index);
    if (it == port.end()) throw DropRecord("no portability extension record");
    e.tests.emplace(QueryKind::Portability,
                    make_test(QueryKind::Portability, it->second.first, it->second.second));
    return e;
}

UnifiedEntry ingest_wfd_record(const json& rec, std::size_t index, const KnowledgeGraph& graph,
                               std::span<const QueryTemplate> templates) {
    UnifiedEntry e;
    e.id = core::make_entry_id(TaskId::Wfd, index);
    e.task = TaskId::Wfd;
    e.language = LanguageCode::parse("en");

    std::string subject = need(rec, "subject");
    std::string relation = need(rec, "relation");
    std::string old_object = need(rec, "old_object");
    std::string new_object = need(rec, "new_object");
    std::string question = need(rec, "question");

    e.edit.query = question;
    e.edit.new_answer = new_object;
    e.edit.old_answer = old_object;
    e.edit.language = e.language;

    e.tests.emplace(QueryKind::Reliability,
                    make_test(QueryKind::Reliability, question, new_object, old_object));
    e.tests.emplace(QueryKind::Generality,
                    make_test(QueryKind::Generality, need(rec, "rephrase"), new_object,
                              old_object));
    if (!rec.contains("locality") || !rec.at("locality").is_object())
        throw DropRecord("missing object 'locality'");
    e.tests.emplace(QueryKind::Locality,
                    make_test(QueryKind::Locality, need(rec.at("locality"), "question"),
                              need(rec.at("locality"), "answer")));

    KnowledgeTriple edited{subject, relation, new_object};
    try {
        e.tests.emplace(QueryKind::Portability,
                        one_hop_portability(graph, e.edit, edited, templates));
    } catch (const NoHopAvailableError& ex) {
        throw DropRecord(ex.what());
    } catch (const MissingTemplateError& ex) {
        throw DropRecord(ex.what());
    }
    return e;
}

}  // namespace

IngestReport ingest(TaskId task, const std::filesystem::path& source_dir) {
    IngestReport report;

    std::map<std::size_t, std::pair<std::string, std::string>> port;
    KnowledgeGraph graph;
    std::vector<QueryTemplate> templates;

    std::string stem(core::to_tag(task));
    json records = load_json_array(source_dir / (stem + ".json"));

    if (task == TaskId::Zsre || task == TaskId::Counterfact) {
        port = load_portability_extension(source_dir / (stem + "_portability.json"));
    } else {
        std::vector<KnowledgeTriple> triples;
        for (const auto& t : load_json_array(source_dir / "wfd_triples.json"))
            triples.push_back(KnowledgeTriple{text::nfc(t.at("subject").get<std::string>()),
                                              text::nfc(t.at("relation").get<std::string>()),
                                              text::nfc(t.at("object").get<std::string>())});
        graph = KnowledgeGraph::from_triples(std::move(triples));
        templates = load_templates(source_dir / "templates.tsv");
    }

    for (std::size_t i = 0; i < records.size(); ++i) {
        try {
            UnifiedEntry e;
            switch (task) {
                case TaskId::Zsre: e = ingest_zsre_record(records[i], i, port); break;
                case TaskId::Counterfact: e = ingest_counterfact_record(records[i], i, port); break;
                case TaskId::Wfd: e = ingest_wfd_record(records[i], i, graph, templates); break;
            }
            auto violations = core::validate_entry(e);
            if (!violations.empty()) throw DropRecord(util::join(violations, "; "));
            report.entries.push_back(std::move(e));
        } catch (const DropRecord& d) {
            report.dropped.push_back("record " + std::to_string(i) + ": " + d.what());
        } catch (const json::exception& ex) {
            report.dropped.push_back("record " + std::to_string(i) + ": " + ex.what());
        }
    }
    return report;
}

}  // namespace mike::builder
