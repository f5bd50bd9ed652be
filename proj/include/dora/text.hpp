#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace dora::text {

/// Paragraphs are blocks separated by blank lines; inner line breaks collapse
/// to single newlines and surrounding whitespace is trimmed.
std::vector<std::string> split_paragraphs(const std::string& raw);

/// Byte spans [begin, end) of sentences, split on terminal punctuation.
/// Decimal points and mid-token periods do not split.
std::vector<std::pair<size_t, size_t>> sentence_spans(const std::string& s);

std::vector<std::string> split_sentences(const std::string& s);

/// Lowercased alphanumeric word tokens (BM25 / overlap tokenization).
std::vector<std::string> word_tokens(const std::string& s);

/// SQuAD-style answer normalization: lowercase, strip punctuation and the
/// articles a/an/the, collapse whitespace.
std::string normalize_answer(const std::string& s);
std::vector<std::string> normalized_tokens(const std::string& s);

bool contains_number(const std::string& s);

/// Canonical numeric/date mentions: digits with separators and magnitude
/// words collapse to a canonical value string ("1.2 billion" -> "1200000000"),
/// percentages keep their sign ("99%"), and year ranges contribute both the
/// compact and the expanded form ("2022-23", "2022-2023").
std::vector<std::string> numeric_mentions(const std::string& s);

std::vector<std::string> ngrams(const std::vector<std::string>& tokens, size_t n);
std::unordered_map<std::string, int> ngram_counts(const std::vector<std::string>& tokens, size_t n);

size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// True if any n consecutive tokens of `needle_tokens` appear consecutively
/// in `hay_tokens`.
bool has_shared_ngram(const std::vector<std::string>& hay_tokens,
                      const std::vector<std::string>& needle_tokens, size_t n);

/// Removes "[Chunk n]" / "[n]" citation markers (they are structural, not
/// content).
std::string strip_citation_markers(const std::string& s);

/// Which bundle chunks an answer draws on. A chunk counts as cited when the
/// answer mentions its number ("[Chunk 2]", "chunk 2", "[2]") or shares at
/// least min_overlap consecutive normalized tokens with it.
std::vector<size_t> cited_chunk_indices(
    const std::string& answer, const std::vector<std::vector<std::string>>& chunk_tokens,
    size_t min_overlap = 6);

} // namespace dora::text
