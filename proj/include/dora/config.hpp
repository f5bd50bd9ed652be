#pragma once

#include <map>
#include <string>
#include <vector>

#include "dora/corpus.hpp"
#include "dora/datastore.hpp"
#include "dora/index.hpp"
#include "dora/providers.hpp"
#include "dora/synthesis.hpp"

namespace dora::cli {

/// One declarative run configuration for every subcommand. Relative paths
/// resolve against the config file's directory; credentials come from the
/// environment variables named per stage, never from the file itself.
struct RunConfig {
    // corpus
    std::string input_dir;
    std::string input_format = "plain-text";
    corpus::TokenizerSpec tokenizer;
    std::vector<std::string> encoding_dirs = {"assets/encodings"};
    corpus::ChunkPolicy chunk_policy;

    providers::ProviderConfig providers;

    std::map<std::string, synthesis::StylePolicy> styles =
        synthesis::StylePolicy::default_policies();
    int target_per_style_per_doc = 1;

    // retrieval / benchmarking
    std::string retriever = "hybrid";
    size_t bench_k = 3;
    index::HybridWeights weights;
    std::vector<std::string> sweep_retrievers = {"bm25", "dense", "hybrid"};
    std::vector<size_t> sweep_ks = {1, 3, 5, 10};
    bool bench_rageval = true;
    bool bench_external = false;
    providers::GenerationParams bench_generation;

    // quality
    double near_dup_cosine = 0.95;
    double des_lambda = 1.0;

    // graph bootstrap
    int knn_k = 5;
    double knn_max_distance = 0.35;
    int graph_questions_per_style = 4;
    size_t icl_examples = 2;
    double judge_threshold = 0.75;
    std::string bootstrap_file;

    // datastore
    datastore::SplitSpec split;
    double mix_synth_fraction = 0.7;
    uint64_t mix_seed = 23;
    std::string manual_dataset;  // optional, enables mixed SFT export

    std::string templates_dir = "assets/templates";
    std::string output_dir = "runs/out";
    uint64_t seed = 17;
    unsigned workers = 2;

    static RunConfig load(const std::string& path);
    static RunConfig from_json(const json& j, const std::string& base_dir);

    /// Canonical form: semantically distinct configs digest differently.
    json to_json() const;
    std::string digest() const;

    corpus::Tokenizer load_tokenizer() const;
};

} // namespace dora::cli
