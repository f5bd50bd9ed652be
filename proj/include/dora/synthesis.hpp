#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dora/corpus.hpp"
#include "dora/providers.hpp"

namespace dora::util {

/// Loads prompt templates from a directory and renders {placeholder}
/// substitutions in a single pass, so inserted values are never re-scanned.
class TemplateStore {
public:
    explicit TemplateStore(std::string dir);

    const std::string& get(const std::string& name) const;
    std::map<std::string, std::string> digests() const;

    static std::string render(const std::string& tmpl,
                              const std::map<std::string, std::string>& vars);

private:
    std::string dir_;
    mutable std::map<std::string, std::string> cache_;
};

} // namespace dora::util

namespace dora::synthesis {

/// Per-style budgets and gates driving evidence selection, generation, and
/// quality control.
struct StylePolicy {
    std::string style;
    int bundle_size = 1;   // evidence chunks per instance
    int prefilter_k = 20;  // NLI prefilter pool size
    int max_combos = 6;    // bundle combinations scored per instance
    std::map<std::string, double> rubric_weights;  // bundle-judge dimensions
    std::map<std::string, double> metric_weights;  // quality metrics
    double threshold = 0.75;
    int quota = 10;
    std::string nli_hypothesis;
    std::string description;

    void validate() const;

    static const std::vector<std::string>& all_styles();
    static StylePolicy defaults_for(const std::string& style);
    static std::map<std::string, StylePolicy> default_policies();
};

struct EvidenceBundle {
    std::vector<std::string> chunk_ids;
    std::map<std::string, double> rubric_scores;
    double g_score = 0;
};

struct QACandidate {
    std::string question;
    std::string answer;
    std::string style;
    EvidenceBundle bundle;
    std::string seed_doc_id;
    std::string raw_completion;
    std::vector<std::string> cited_chunks;
    int attempt = 0;
    long generation_elapsed_ms = 0;
};

struct RankedChunk {
    const corpus::Chunk* chunk = nullptr;
    double relevance = 0;
};

/// Ranks a seed document's chunks by NLI relevance (entail - contradict)
/// against the style hypothesis; keeps positives, top-K. Throws kind "skip"
/// when fewer than bundle_size survive.
std::vector<RankedChunk> nli_prefilter(const std::vector<corpus::Chunk>& seed_chunks,
                                       const StylePolicy& policy,
                                       providers::ProviderHub& hub);

/// Index combinations of size k in rank-lexicographic order (best-ranked
/// chunks first), capped at max_combos. Empty when pool < k.
std::vector<std::vector<size_t>> enumerate_bundles(size_t pool_size, int k, int max_combos);

EvidenceBundle score_bundle(const std::vector<const corpus::Chunk*>& combination,
                            const StylePolicy& policy, const util::TemplateStore& templates,
                            providers::ProviderHub& hub);

/// Argmax of g_score over enumerated bundles; ties break toward the
/// lexicographically smallest chunk-id list.
EvidenceBundle select_evidence(const std::vector<corpus::Chunk>& seed_chunks,
                               const StylePolicy& policy, const util::TemplateStore& templates,
                               providers::ProviderHub& hub);

std::string render_context(const std::vector<const corpus::Chunk*>& chunks);

std::string render_prompt(const StylePolicy& policy,
                          const std::vector<const corpus::Chunk*>& bundle_chunks,
                          const util::TemplateStore& templates);

std::pair<std::string, std::string> parse_qa(const std::string& completion);

struct GenerationReport {
    int attempts = 0;
    int produced = 0;
    std::vector<json> skips;

    void add_skip(const std::string& doc_id, const std::string& style,
                  const std::string& reason, int count = 1);
};

/// Over-generates 2x target_per_style candidates per style from one seed
/// document. Individual failures are recorded in the report, never fatal.
std::vector<QACandidate> generate_candidates(
    const std::vector<corpus::Chunk>& seed_doc_chunks,
    const std::map<std::string, StylePolicy>& policies, int target_per_style,
    const util::TemplateStore& templates, providers::ProviderHub& hub,
    GenerationReport* report);

json bundle_to_json(const EvidenceBundle& b);
EvidenceBundle bundle_from_json(const json& j);
json candidate_to_json(const QACandidate& c);
QACandidate candidate_from_json(const json& j);

} // namespace dora::synthesis
