#pragma once

#include <memory>
#include <string>

#include "dora/config.hpp"
#include "dora/providers.hpp"

namespace dora::cli {

/// Shared per-run state: config, tokenizer, templates, and the provider hub
/// wired to the configured transport ("sim://" URLs run in-process).
class Pipeline {
public:
    explicit Pipeline(RunConfig config,
                      std::shared_ptr<providers::Transport> transport = nullptr);

    const RunConfig& config() const { return config_; }
    providers::ProviderHub& hub() { return *hub_; }
    const corpus::Tokenizer& tokenizer();
    const util::TemplateStore& templates() const { return templates_; }

    // artifact paths inside the output directory
    std::string chunk_store_path() const;
    std::string candidates_path() const;
    std::string dataset_path() const;
    std::string audit_path() const;

    void write_manifest(const std::string& command, const json& extra = json::object());

    // subcommands; each one requires its upstream artifacts on disk
    void cmd_ingest();
    void cmd_synth();
    void cmd_qc();
    void cmd_graph_gen();
    void cmd_bench_retrieval();
    void cmd_bench_qa();
    void cmd_export_sft();
    void cmd_stats();
    void cmd_annotate_export();
    void cmd_annotate_import(const std::string& answers_path);

private:
    RunConfig config_;
    util::TemplateStore templates_;
    std::shared_ptr<providers::Transport> transport_;
    std::unique_ptr<providers::ProviderHub> hub_;
    std::unique_ptr<corpus::Tokenizer> tokenizer_;
};

} // namespace dora::cli
