#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dora/index.hpp"
#include "dora/providers.hpp"
#include "dora/quality.hpp"
#include "dora/synthesis.hpp"

namespace dora::evalhub {

struct RetrievalJudgment {
    std::string instance_id;
    std::set<std::string> gold;           // G_i, non-empty
    std::vector<std::string> ranked;      // d_{i,1..k}
    size_t k = 0;                         // defaults to ranked.size()
};

int hit_at_k(const RetrievalJudgment& judgment);
double recall_at_k(const RetrievalJudgment& judgment);

/// Bag-of-token F1 over normalized tokens. Both empty -> 1, one empty -> 0.
double token_f1(const std::string& prediction, const std::string& reference);

/// LCS-based F-measure (beta = 1) over normalized tokens.
double rouge_l(const std::string& prediction, const std::string& reference);

/// Sentence-level BLEU-4, add-one smoothing on the n >= 2 orders, with
/// brevity penalty; corpus score is the mean of sentence scores.
double bleu(const std::string& prediction, const std::string& reference);

struct KeypointAudit {
    std::vector<std::string> keypoints;
    std::vector<std::string> labels;  // complete | hallucinated | irrelevant
    double comp = 0;
    double hall = 0;
    double irr = 0;
};

/// Judge-driven keypoint diagnostics; throws kind "skip" when the judge
/// extracts zero keypoints.
KeypointAudit rageval_diagnostics(const std::string& gold_answer,
                                  const std::string& prediction,
                                  const util::TemplateStore& templates,
                                  providers::ProviderHub& hub);

struct InstanceScore {
    std::string instance_id;
    std::string style;
    std::optional<double> hit;
    std::optional<double> recall;
    double token_f1 = 0;
    double rouge_l = 0;
    double bleu = 0;
    std::optional<double> bleurt;
    std::optional<double> bertscore;
    std::optional<double> comp;
    std::optional<double> hall;
    std::optional<double> irr;
};

struct EvalReport {
    std::vector<InstanceScore> rows;
    json micro;                       // micro-averages over scored instances
    std::map<std::string, json> per_style;
    int failures = 0;
    json manifest;

    json to_json() const;
    std::string to_table() const;
};

struct BenchInstance {
    std::string instance_id;
    std::string question;
    std::string reference_answer;
    std::string style;
    std::vector<std::string> evidence;  // gold chunk ids
};

enum class RetrieverKind { bm25, dense, hybrid, oracle };
RetrieverKind parse_retriever(const std::string& name);
std::string to_string(RetrieverKind kind);

struct BenchmarkConfig {
    RetrieverKind retriever = RetrieverKind::oracle;
    size_t k = 3;
    index::HybridWeights weights;
    bool rageval = false;
    bool external_scores = false;  // bleurt/bertscore endpoints
    providers::GenerationParams generation;
    unsigned workers = 1;
};

/// Answer prompt shared with the SFT exporter so training inputs mirror the
/// oracle evaluation setting exactly.
std::string render_answer_prompt(const std::string& question,
                                 const std::vector<std::string>& context_texts,
                                 const util::TemplateStore& templates);

/// End-to-end QA benchmark: retrieve (or take gold evidence), generate, and
/// score every configured metric. Per-instance failures are counted and
/// excluded from the averages.
EvalReport run_benchmark(const std::vector<BenchInstance>& instances,
                         const std::vector<corpus::Chunk>& chunk_store,
                         const BenchmarkConfig& config, const util::TemplateStore& templates,
                         providers::ProviderHub& hub);

/// Hit@k / Recall@k sweep for one retriever kind over the given cutoffs.
json retrieval_sweep(const std::vector<BenchInstance>& instances,
                     const std::vector<corpus::Chunk>& chunk_store, RetrieverKind kind,
                     const std::vector<size_t>& ks, const index::HybridWeights& weights,
                     providers::ProviderHub& hub);

} // namespace dora::evalhub
