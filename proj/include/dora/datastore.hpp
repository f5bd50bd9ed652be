#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dora/corpus.hpp"
#include "dora/quality.hpp"
#include "dora/synthesis.hpp"

namespace dora::datastore {

struct DatasetRecord {
    std::string instance_id;
    std::string question;
    std::string answer;
    std::string style;
    std::vector<std::string> evidence;  // chunk ids, stored order
    std::string seed_doc_id;
    std::string seed_doc_name;
    quality::QualityBreakdown quality;
    double duration_s = 0;
    std::string pipeline_version;

    static DatasetRecord from_instance(const quality::QAInstance& inst,
                                       const std::string& doc_name,
                                       const std::string& pipeline_version);
};

struct SftExample {
    std::string input;
    std::string target;
};

struct SplitSpec {
    double ratio = 0.9;
    uint64_t rng_seed = 7;
    bool stratify_by_style = true;

    void validate() const;
};

/// Dataset files are line-delimited records behind a schema-version header.
void write_dataset(const std::string& path, const std::vector<DatasetRecord>& records);

/// Reads a dataset; when a chunk store is supplied every evidence reference
/// must resolve in it.
std::vector<DatasetRecord> read_dataset(
    const std::string& path, const std::vector<corpus::Chunk>* chunk_store = nullptr);

struct StyleStats {
    std::string style;
    size_t count = 0;
    double pct = 0;
    double avg_q_tokens = 0;
    double avg_a_tokens = 0;
    double refs_per_sample = 0;
    double avg_duration_s = 0;
    double avg_quality = 0;
    size_t docs = 0;
};

struct DatasetStats {
    std::vector<StyleStats> rows;  // per style, alphabetical
    StyleStats total;              // "Total/Avg" row (weighted means)

    json to_json() const;
    std::string to_table() const;
};

DatasetStats dataset_stats(const std::vector<DatasetRecord>& records,
                           const corpus::Tokenizer& tokenizer);

/// Seeded shuffle split; stratified variant keeps per-style ratios within
/// one record. Styles with fewer than 2 records stay whole in train, with a
/// warning.
std::pair<std::vector<DatasetRecord>, std::vector<DatasetRecord>> split(
    const std::vector<DatasetRecord>& records, const SplitSpec& spec,
    std::vector<std::string>* warnings = nullptr);

/// One training example per record; the input rendering is shared with the
/// benchmark's oracle-mode answer prompt.
std::vector<SftExample> export_sft(const std::vector<DatasetRecord>& records,
                                   const std::vector<corpus::Chunk>& chunk_store,
                                   const util::TemplateStore& templates);

void write_sft(const std::string& path, const std::vector<SftExample>& examples);

/// Upsampled mix: manual examples are resampled with replacement to
/// round(|synthetic| * (1-f) / f), then concatenated and shuffled.
std::vector<DatasetRecord> mix_with_upsampling(const std::vector<DatasetRecord>& synthetic,
                                               const std::vector<DatasetRecord>& manual,
                                               double synth_fraction, uint64_t rng_seed);

long upsampled_manual_count(size_t synthetic_count, double synth_fraction);

json record_to_json(const DatasetRecord& r);
DatasetRecord record_from_json(const json& j);

} // namespace dora::datastore
