#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dora/corpus.hpp"
#include "dora/providers.hpp"
#include "dora/synthesis.hpp"

namespace dora::graphgen {

/// Directed semantic k-NN graph over chunk embeddings. Edges keep cosine
/// distance (1 - cosine similarity) strictly below max_distance; self-loops
/// are excluded.
struct SemanticGraph {
    std::vector<std::string> nodes;  // chunk ids, store order
    std::vector<std::vector<std::pair<size_t, double>>> out_edges;  // (target, distance)
    int k = 5;
    double max_distance = 0.35;

    struct Stats {
        size_t node_count = 0;
        size_t edge_count = 0;
        double mean_out_degree = 0;
        double sd_out_degree = 0;
    };
    Stats stats() const;
};

SemanticGraph build_knn_graph(const std::vector<corpus::Chunk>& chunks,
                              providers::ProviderHub& hub, int k = 5,
                              double max_distance = 0.35,
                              const std::string& stage = "embed_construction");

/// Graph construction from precomputed unit vectors (store order).
SemanticGraph knn_from_vectors(const std::vector<std::string>& ids,
                               const std::vector<std::vector<double>>& vectors, int k,
                               double max_distance);

/// Uniform random node; single node for find/provide, the node plus its
/// one-hop out-neighborhood for the long-form styles.
std::vector<size_t> sample_context(const SemanticGraph& graph, const std::string& style,
                                   util::Rng& rng);

struct BootstrapExample {
    std::string question;
    std::string answer;
    std::string style;
};

std::vector<BootstrapExample> load_bootstrap_pool(const std::string& path);

struct IclGeneration {
    std::string question;
    std::string answer;
    long elapsed_ms = 0;
};

/// Fills the in-context-learning template with n same-style bootstrap
/// examples (sampled without replacement) and numbered passages; parses the
/// JSON completion, retrying once with a stricter instruction.
IclGeneration generate_with_icl(const std::string& style,
                                const std::vector<std::string>& context_texts,
                                const std::vector<BootstrapExample>& bootstrap_pool,
                                size_t n_examples, util::Rng& rng,
                                const util::TemplateStore& templates,
                                providers::ProviderHub& hub);

struct JudgeOutcome {
    bool accepted = false;
    double score = 0;
    std::string reasoning;
};

/// Rubric-judges a generated pair; acceptance requires score strictly above
/// the threshold. Judge failures reject with reason "unscorable".
JudgeOutcome judge_qa(const std::string& question, const std::string& answer,
                      const std::vector<std::string>& context_texts,
                      const std::string& style, double threshold,
                      const util::TemplateStore& templates, providers::ProviderHub& hub);

struct BootstrapItem {
    std::string task_id;
    std::string style;
    std::string question;
    std::string generated_answer;
    std::vector<std::string> context_chunk_ids;
    std::vector<std::string> context_texts;
    double judge_score = 0;
    std::string judge_reasoning;
    bool judge_accepted = false;
};

struct AnnotationTask {
    std::string task_id;
    std::string style;
    std::string question;
    std::vector<std::string> context_texts;
    std::optional<std::string> expert_answer;
    std::optional<bool> validity_flag;
};

/// Writes the task file (jsonl, schema-versioned) plus a spreadsheet-friendly
/// TSV. Generated answers are never serialized into either file.
void export_annotation_tasks(const std::vector<BootstrapItem>& items,
                             const std::string& jsonl_path, const std::string& tsv_path);

/// Joins expert answers back onto exported tasks. Answer records reference
/// task_ids; unknown ids are errors. Invalid items are retained with the
/// flag set.
std::vector<AnnotationTask> import_annotations(const std::string& tasks_path,
                                               const std::string& answers_path);

json bootstrap_item_to_json(const BootstrapItem& item);
BootstrapItem bootstrap_item_from_json(const json& j);

} // namespace dora::graphgen
