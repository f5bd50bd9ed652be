#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dora/tokenizer.hpp"
#include "dora/util.hpp"

namespace dora::corpus {

enum class InputFormat { plain_text, markdown, pdf_extracted_text };

InputFormat parse_input_format(const std::string& name);
std::string to_string(InputFormat f);

struct Paragraph {
    std::string text;
    int page = 1;
    std::optional<std::string> section;
};

struct Document {
    std::string doc_id;
    std::string name;
    std::string path;
    std::vector<std::pair<int, std::string>> pages;
    std::vector<Paragraph> paragraphs;
};

struct ChunkPolicy {
    int target_tokens = 512;
    int min_tokens = 100;
    int max_tokens = 1024;
    double window_sentence_overlap = 0.25;

    void validate() const;

    /// Retrieval-benchmark profile: 320-token chunks, 64-token overlap
    /// (expressed as the equivalent sentence fraction).
    static ChunkPolicy benchmark_profile() { return {320, 100, 320, 0.2}; }
};

struct Chunk {
    std::string chunk_id;
    std::string doc_id;
    std::string doc_name;
    std::vector<int> pages;
    std::optional<std::string> section_header;
    std::string text;
    int token_count = 0;
};

/// Decodes a raw payload into an ordered-paragraph document. Page numbers
/// come from form-feed breaks for pdf-extracted text; other formats get a
/// single synthetic page.
Document ingest(const std::string& raw, InputFormat format, const std::string& name,
                const std::string& path = "");

size_t token_count(const std::string& text, const Tokenizer& tokenizer);

/// Greedy paragraph packing up to the target budget with a sentence-window
/// fallback for oversized paragraphs. Deterministic: same (doc, policy,
/// encoding) gives identical chunk ids and texts.
std::vector<Chunk> chunk_document(const Document& doc, const ChunkPolicy& policy,
                                  const Tokenizer& tokenizer);

std::vector<Chunk> chunk_corpus(const std::vector<Document>& docs,
                                const ChunkPolicy& policy, const Tokenizer& tokenizer,
                                unsigned workers = 1);

json chunk_to_json(const Chunk& c);
Chunk chunk_from_json(const json& j);

void write_chunk_store(const std::string& path, const std::vector<Chunk>& chunks);
std::vector<Chunk> read_chunk_store(const std::string& path);

} // namespace dora::corpus
