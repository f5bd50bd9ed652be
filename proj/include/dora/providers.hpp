#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dora/util.hpp"

namespace dora::providers {

struct GenerationParams {
    double temperature = 0.3;
    int max_new_tokens = 512;
    std::string model_name;
    std::optional<int64_t> seed;  // distinguishes over-generation attempts

    void validate() const;
};

struct NliVerdict {
    double entail = 0;
    double neutral = 0;
    double contradict = 0;
};

struct SpanResult {
    std::string span;
    double confidence = 0;
};

struct JudgeVerdict {
    json fields;
    std::optional<double> score;
    bool clamp_warning = false;
    long elapsed_ms = 0;
};

struct ChatResult {
    std::string text;
    long elapsed_ms = 0;
};

struct HttpResponse {
    int status = 0;  // 0 means transport failure
    std::string body;
    long elapsed_ms = 0;
    std::string error;
};

/// Wire-level POST; implementations: real HTTP (cpp-httplib) and the
/// in-process simulated endpoints (dora/sim.hpp).
class Transport {
public:
    virtual ~Transport() = default;
    virtual HttpResponse post(const std::string& base_url, const std::string& path,
                              const json& body, const std::string& api_key) = 0;
};

std::unique_ptr<Transport> make_http_transport(long timeout_ms = 60000);

enum class Mode { live, record, replay };
Mode parse_mode(const std::string& name);
std::string to_string(Mode m);

struct RetryPolicy {
    int max_attempts = 5;
    long base_delay_ms = 250;
    long max_total_delay_ms = 30000;
};

struct StageEndpoint {
    std::string base_url;
    std::string model;
    std::string api_key_env;  // env var holding the credential, never the value
};

struct ProviderConfig {
    Mode mode = Mode::live;
    std::string archive_path;  // cache + replay fixture archive (jsonl)
    RetryPolicy retry;
    double rate_limit_qps = 0;  // 0 disables limiting
    std::map<std::string, StageEndpoint> stages;
};

/// On-disk call archive: one record per cached call
/// {key, kind, request, response, elapsed_ms, timestamp}.
class FixtureArchive {
public:
    FixtureArchive(std::string path, bool writable);

    struct Entry {
        json response;
        long elapsed_ms = 0;
    };

    std::optional<Entry> lookup(const std::string& key) const;
    void insert(const std::string& key, const std::string& kind, const json& request,
                const json& response, long elapsed_ms);
    size_t size() const;
    const std::string& path() const { return path_; }

private:
    std::string path_;
    bool writable_;
    mutable std::mutex mutex_;
    std::map<std::string, Entry> entries_;
};

/// Uniform client for every external model service. All calls go through a
/// content-addressed cache; replay mode answers entirely from the archive
/// and never touches the transport.
class ProviderHub {
public:
    ProviderHub(ProviderConfig config, std::shared_ptr<Transport> transport);

    ChatResult chat(const std::string& prompt, const GenerationParams& params,
                    const std::string& stage = "generation");

    /// One L2-normalized vector per input text.
    std::vector<std::vector<double>> embed(const std::vector<std::string>& texts,
                                           const std::string& stage = "embed_construction");

    NliVerdict nli(const std::string& premise, const std::string& hypothesis,
                   const std::string& stage = "nli_faithfulness");

    SpanResult extract_span(const std::string& question, const std::string& context,
                            const std::string& stage = "span_qa");

    /// Rubric call at temperature 0 with a structured-JSON response; retries
    /// once with a stricter instruction on parse failure.
    JudgeVerdict judge(const std::string& rubric_prompt,
                       const std::vector<std::string>& expected_fields,
                       const std::string& stage = "judge");

    /// Learned metric endpoints (kind: "bleurt" or "bertscore").
    double external_score(const std::string& prediction, const std::string& reference,
                          const std::string& kind);

    bool stage_configured(const std::string& stage) const;
    const StageEndpoint& stage(const std::string& name) const;

    long network_calls() const { return network_calls_.load(); }
    Mode mode() const { return config_.mode; }
    const ProviderConfig& config() const { return config_; }

    /// Test seam; default sleeps for real.
    void set_sleeper(std::function<void(long)> sleeper) { sleeper_ = std::move(sleeper); }

private:
    struct CallOutcome {
        json response;
        long elapsed_ms = 0;
    };

    CallOutcome call(const std::string& kind, const std::string& path,
                     const std::string& stage_name, json body);
    std::string resolve_api_key(const StageEndpoint& ep) const;
    void rate_admit();

    ProviderConfig config_;
    std::shared_ptr<Transport> transport_;
    std::unique_ptr<FixtureArchive> archive_;
    std::atomic<long> network_calls_{0};
    std::function<void(long)> sleeper_;

    std::mutex inflight_mutex_;
    std::map<std::string, std::shared_ptr<std::mutex>> inflight_;

    std::mutex rate_mutex_;
    std::chrono::steady_clock::time_point next_admit_{};
};

/// Parses a model completion that should contain a JSON object, tolerating
/// markdown fences and surrounding prose.
std::optional<json> extract_json_object(const std::string& completion);

} // namespace dora::providers
