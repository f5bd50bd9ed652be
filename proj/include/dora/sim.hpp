#pragma once

#include <string>

#include "dora/providers.hpp"
#include "dora/util.hpp"

namespace dora::sim {

/// Deterministic simulated model endpoints speaking the same wire contracts
/// as the real services (chat, embeddings, NLI, span extraction, scoring).
/// Responses are pure functions of the request content, which makes offline
/// runs, fixture recording, and CI fully reproducible. Serve over HTTP with
/// tools/sim_server_main.cpp or in-process via SimTransport.
class SimModel {
public:
    static constexpr int kEmbeddingDim = 64;

    json handle(const std::string& path, const json& request) const;

    json chat_completion(const json& request) const;
    json embeddings(const json& request) const;
    json nli(const json& request) const;
    json extract(const json& request) const;
    json score(const json& request) const;
};

/// In-process transport backed by SimModel; selected by base URLs with the
/// "sim://" scheme. Reported latency is a deterministic function of the
/// request digest.
class SimTransport : public providers::Transport {
public:
    providers::HttpResponse post(const std::string& base_url, const std::string& path,
                                 const json& body, const std::string& api_key) override;

private:
    SimModel model_;
};

/// Routes "sim://" base URLs to SimTransport and everything else to a real
/// HTTP transport.
std::shared_ptr<providers::Transport> make_default_transport(long timeout_ms = 60000);

} // namespace dora::sim
