#include "mike/prompting/template.hpp"

#include "mike/errors.hpp"
#include "mike/util/ini.hpp"
#include "mike/util/strings.hpp"

namespace mike::prompting {

namespace {

std::string unescape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) {
            char next = s[i + 1];
            if (next == 'n') {
                out.push_back('\n');
                ++i;
                continue;
            }
            if (next == 't') {
                out.push_back('\t');
                ++i;
                continue;
            }
            if (next == '\\') {
                out.push_back('\\');
                ++i;
                continue;
            }
        }
        out.push_back(s[i]);
    }
    return out;
}

}  // namespace

TemplateSet TemplateSet::mike_v1() {
    TemplateSet t;
    t.id = "mike-v1";
    t.preamble_zero_shot =
        "Use the new fact below when replying. Respond to the question with the "
        "answer only.\n\n";
    t.preamble_few_shot =
        "Below are examples of replies that use newly provided facts. Use the "
        "final new fact when replying to the last question, with the answer "
        "only.\n\n";
    t.demo_block = "New Fact: {fact_query} {fact_answer}\nQuestion: {question}\nAnswer: {answer}\n\n";
    t.live_block = "New Fact: {fact_query} {fact_answer}\nQuestion: {question}\nAnswer:";
    return t;
}

TemplateSet TemplateSet::load(const std::filesystem::path& file) {
    auto ini = util::Ini::load(file);
    TemplateSet t;
    t.id = ini.get_or("id", file.stem().string());
    auto req = [&](const char* key) {
        auto v = ini.get(key);
        if (!v) throw ParseError("template set " + file.string() + ": missing key '" + key + "'");
        return unescape(*v);
    };
    t.preamble_zero_shot = req("preamble_zero_shot");
    t.preamble_few_shot = req("preamble_few_shot");
    t.demo_block = req("demo_block");
    t.live_block = req("live_block");
    return t;
}

std::string TemplateSet::preamble(bool few_shot, core::TaskId task) const {
    (void)task;
    return few_shot ? preamble_few_shot : preamble_zero_shot;
}

std::string TemplateSet::render_demo(const core::Demonstration& demo) const {
    std::string out = demo_block;
    out = util::replace_all(std::move(out), "{fact_query}", demo.fact.query);
    out = util::replace_all(std::move(out), "{fact_answer}", demo.fact.new_answer);
    out = util::replace_all(std::move(out), "{question}", demo.query);
    out = util::replace_all(std::move(out), "{answer}", demo.answer);
    return out;
}

std::string TemplateSet::render_live(const core::KnowledgeFact& fact,
                                     const std::string& question) const {
    std::string out = live_block;
    out = util::replace_all(std::move(out), "{fact_query}", fact.query);
    out = util::replace_all(std::move(out), "{fact_answer}", fact.new_answer);
    out = util::replace_all(std::move(out), "{question}", question);
    return out;
}

}  // namespace mike::prompting
