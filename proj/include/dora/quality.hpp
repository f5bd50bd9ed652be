#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dora/providers.hpp"
#include "dora/synthesis.hpp"

namespace dora::quality {

struct QualityBreakdown {
    std::optional<double> des;
    std::optional<double> span_f1;
    std::optional<double> numeric_consistency;  // empty when not applicable
    std::optional<double> context_recall;
    std::optional<double> context_precision;
    std::optional<double> qa_relevancy;
    double composite = 0;
    bool scorable = false;

    json to_json() const;
    static QualityBreakdown from_json(const json& j);
};

struct QAInstance {
    std::string instance_id;
    synthesis::QACandidate candidate;
    QualityBreakdown quality;
    bool accepted = false;
    std::optional<std::string> rejection_reason;
};

struct GateResult {
    bool pass = false;
    std::string reason;  // machine-readable, e.g. "no-numeric"
};

/// Style-specific hard checks; total over all inputs.
GateResult hard_gate(const synthesis::QACandidate& candidate,
                     const synthesis::StylePolicy& policy,
                     const std::vector<std::string>& bundle_texts);

/// Evidence-grounded metric computation. Provider failures mark the metric
/// unavailable instead of failing the candidate; composite weights are
/// renormalized over whatever remains.
class MetricEngine {
public:
    MetricEngine(providers::ProviderHub& hub, double des_lambda = 1.0,
                 const std::string& nli_stage = "nli_faithfulness",
                 const std::string& embed_stage = "embed_construction");

    double des(const std::string& answer, const std::vector<std::string>& bundle_texts);
    double span_f1(const std::string& answer,
                   const std::vector<std::string>& bundle_texts) const;
    std::optional<double> numeric_consistency(
        const std::string& answer, const std::vector<std::string>& bundle_texts) const;

    struct CoverageScores {
        double qa_relevancy = 0;
        double context_recall = 0;
        double context_precision = 0;
    };
    CoverageScores relevancy_and_coverage(const std::string& question,
                                          const std::string& answer,
                                          const std::vector<std::string>& bundle_texts);

    QualityBreakdown score(const synthesis::QACandidate& candidate,
                           const synthesis::StylePolicy& policy,
                           const std::vector<std::string>& bundle_texts);

private:
    providers::ProviderHub& hub_;
    double des_lambda_;
    std::string nli_stage_;
    std::string embed_stage_;
};

/// Gate + composite acceptance for one candidate; never throws for
/// per-candidate conditions.
QAInstance evaluate_candidate(const synthesis::QACandidate& candidate,
                              const synthesis::StylePolicy& policy,
                              const std::vector<std::string>& bundle_texts,
                              MetricEngine& engine);

/// Removes exact duplicate questions per seed document, then near-duplicates
/// (question-embedding cosine >= threshold) keeping the higher composite.
/// Dropped instances are appended to `dropped` with their reason set.
std::vector<QAInstance> dedup_and_diversify(std::vector<QAInstance> accepted,
                                            providers::ProviderHub& hub,
                                            double near_dup_cosine,
                                            std::vector<QAInstance>* dropped,
                                            const std::string& embed_stage = "embed_construction");

struct SelectionResult {
    std::vector<QAInstance> selected;
    std::vector<QAInstance> overflow;  // accepted but beyond quota
    std::vector<std::string> warnings;
};

/// Per style: accepted candidates by composite descending, quota kept,
/// shortfalls warned.
SelectionResult select_final(std::vector<QAInstance> accepted,
                             const std::map<std::string, synthesis::StylePolicy>& policies);

json instance_to_json(const QAInstance& inst);
QAInstance instance_from_json(const json& j);

std::string make_instance_id(const synthesis::QACandidate& c);

} // namespace dora::quality
