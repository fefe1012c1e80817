#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mike/core/types.hpp"
#include "mike/lm/client.hpp"
#include "mike/metrics/metrics.hpp"
#include "mike/prompting/prompt.hpp"
#include "mike/retrieval/corpus.hpp"

namespace mike::runner {

enum class Method { PromptBaseline, MikeRandom, MikeSearch };

std::string_view to_tag(Method method);
Method parse_method(std::string_view tag);

struct RunConfig {
    Method method = Method::MikeRandom;
    core::TaskId task = core::TaskId::Zsre;
    core::LanguageCode source_lang = core::LanguageCode::parse("en");
    std::vector<core::LanguageCode> target_langs;
    prompting::PromptConfig prompt;
    lm::GenerationParams params;
    std::uint64_t seed = 42;
    int max_concurrency = 4;
    bool deterministic = false;     // pins temperature 0 for generation
    bool redraw_per_entry = false;  // ablation: redraw random demos per entry

    void validate() const;
    // Canonical JSON; resume refuses when the stored snapshot differs.
    std::string canonical_snapshot() const;
};

// Which metrics score each (task, kind); mirrors the benchmark's report
// layout. zsRE: F1/EM everywhere. CounterFact: S/M except portability.
// WFD: S/M for reliability and generality only.
std::vector<metrics::MetricName> metric_selection(core::TaskId task, core::QueryKind kind);

struct EvalRecord {
    std::string entry_id;  // base (source) id; language held separately
    core::LanguageCode language;
    core::QueryKind kind = core::QueryKind::Reliability;
    Method method = Method::PromptBaseline;
    std::vector<std::pair<metrics::MetricName, double>> metric_values;  // 0-100 scale
    std::string raw_prediction;  // extracted answer span; empty for scored kinds
    std::string prompt_fingerprint;  // hex
};

std::string record_to_line(const EvalRecord& record);
EvalRecord record_from_line(const std::string& line);

struct AggregateRow {
    std::string language;  // "all" for the cross-language macro average
    core::QueryKind kind = core::QueryKind::Reliability;
    metrics::MetricName metric = metrics::MetricName::F1;
    double value = 0.0;
    std::size_t count = 0;
};

// Per-(language, kind, metric) means plus "all" rows holding the mean of
// per-language means (macro, never item-pooled).
std::vector<AggregateRow> compute_aggregates(std::span<const EvalRecord> records);
void write_aggregates_csv(const std::filesystem::path& file,
                          std::span<const AggregateRow> rows);
std::vector<AggregateRow> read_aggregates_csv(const std::filesystem::path& file);

enum class RunStatus { Complete, Partial };

struct RunResult {
    RunStatus status = RunStatus::Complete;
    std::size_t new_records = 0;
    std::size_t total_records = 0;
    std::size_t lm_calls = 0;
    std::size_t skips = 0;
};

struct RunInputs {
    std::vector<core::UnifiedEntry> dataset;  // test entries, source + target languages
    std::vector<core::UnifiedEntry> corpus;   // demo corpus, source + target languages
};

struct RunClients {
    lm::LmClient* lm = nullptr;
    retrieval::EmbeddingProvider* embedder = nullptr;  // required for MikeSearch
    std::optional<std::filesystem::path> vector_store;
};

struct RunHooks {
    // Stop after writing this many new records (testing aid for resume).
    std::optional<std::size_t> stop_after_records;
};

// Evaluates every (entry, target language, kind), persisting per-item
// records, aggregates, and a hashed manifest under run_dir. Validation runs
// before the first LM call; mid-run failures leave a resumable checkpoint.
RunResult run(const RunConfig& config, const RunInputs& inputs, const RunClients& clients,
              const prompting::TemplateSet& templates, const std::filesystem::path& run_dir,
              const RunHooks& hooks = {});

// Skips already-recorded triples; final outputs are identical to an
// uninterrupted run. Throws RefusedResumeError on config mismatch.
RunResult resume(const RunConfig& config, const RunInputs& inputs, const RunClients& clients,
                 const prompting::TemplateSet& templates, const std::filesystem::path& run_dir,
                 const RunHooks& hooks = {});

}  // namespace mike::runner
