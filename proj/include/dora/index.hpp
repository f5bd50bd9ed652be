#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "dora/corpus.hpp"
#include "dora/providers.hpp"

namespace dora::index {

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
};

struct HybridWeights {
    double dense_weight = 0.7;
    double lexical_weight = 0.3;

    void validate() const;
};

struct RankedHit {
    std::string chunk_id;
    double dense_score = 0;
    double lexical_score_normalized = 0;
    double mixed_score = 0;
    int rank = 0;
};

/// Okapi BM25 postings over lowercased alphanumeric tokens.
/// idf(t) = ln(1 + (N - df + 0.5) / (df + 0.5)), which keeps scores
/// non-negative.
class LexicalIndex {
public:
    static LexicalIndex build(const std::vector<corpus::Chunk>& chunks,
                              Bm25Params params = {});

    double score(const std::vector<std::string>& query_tokens, size_t chunk_idx) const;
    std::vector<std::pair<double, size_t>> search(const std::string& query, size_t n) const;

    size_t size() const { return chunk_ids_.size(); }
    const std::string& chunk_id(size_t idx) const { return chunk_ids_[idx]; }
    double avg_length() const { return avg_len_; }
    const Bm25Params& params() const { return params_; }

private:
    Bm25Params params_;
    std::vector<std::string> chunk_ids_;
    std::vector<size_t> lengths_;
    double avg_len_ = 0;
    std::unordered_map<std::string, std::vector<std::pair<size_t, int>>> postings_;
};

/// chunk_id -> unit-norm embedding; inner-product search equals cosine.
class VectorIndex {
public:
    static VectorIndex build(const std::vector<corpus::Chunk>& chunks,
                             providers::ProviderHub& hub,
                             const std::string& stage = "embed_construction");
    static VectorIndex from_vectors(std::vector<std::string> chunk_ids,
                                    std::vector<std::vector<double>> vectors);

    std::vector<std::pair<double, size_t>> search(const std::vector<double>& query,
                                                  size_t n) const;
    double cosine(const std::vector<double>& query, size_t chunk_idx) const;

    size_t size() const { return chunk_ids_.size(); }
    size_t dimension() const { return dim_; }
    const std::string& chunk_id(size_t idx) const { return chunk_ids_[idx]; }
    const std::vector<double>& vector(size_t idx) const { return vectors_[idx]; }

private:
    std::vector<std::string> chunk_ids_;
    std::vector<std::vector<double>> vectors_;
    size_t dim_ = 0;
};

/// Hybrid retriever mixing cosine similarity with per-query max-normalized
/// BM25. Both indexes must cover the same chunk set in the same order.
class HybridIndex {
public:
    HybridIndex(LexicalIndex lexical, VectorIndex dense);

    std::vector<RankedHit> search(const std::string& query,
                                  const std::vector<double>& query_vector, size_t k,
                                  const HybridWeights& weights) const;

    /// Embeds the query through the hub, then searches.
    std::vector<RankedHit> search(const std::string& query, size_t k,
                                  const HybridWeights& weights, providers::ProviderHub& hub,
                                  const std::string& stage = "embed_retrieval") const;

    const LexicalIndex& lexical() const { return lexical_; }
    const VectorIndex& dense() const { return dense_; }

private:
    LexicalIndex lexical_;
    VectorIndex dense_;
};

/// Gold-evidence retriever: returns exactly the recorded bundle, in order.
std::vector<RankedHit> oracle_retrieve(const std::vector<std::string>& evidence_chunk_ids,
                                       const std::unordered_map<std::string, size_t>& store_index);

std::unordered_map<std::string, size_t> build_store_index(
    const std::vector<corpus::Chunk>& chunks);

} // namespace dora::index
