#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace dora::corpus {

/// Names the byte-pair encoding used for all token budgets and length stats.
struct TokenizerSpec {
    std::string encoding_name = "dora-bpe";
};

/// Byte-level BPE over a tiktoken-format vocabulary file (one
/// "base64(token) rank" pair per line). Encoding is greedy lowest-rank
/// pair merging after a fixed rule-based pre-tokenization, so counts are
/// deterministic for a given vocabulary.
class Tokenizer {
public:
    /// Loads "<name>.tiktoken" from the first search dir that has it.
    static Tokenizer load(const TokenizerSpec& spec,
                          const std::vector<std::string>& search_dirs);
    static Tokenizer load_file(const std::string& path, const std::string& name);

    const std::string& name() const { return name_; }

    size_t count(const std::string& text) const;
    std::vector<int> encode(const std::string& text) const;

    /// Splits text into byte-exact pieces of at most max_tokens each;
    /// concatenating the pieces reproduces the input.
    std::vector<std::string> split_by_tokens(const std::string& text,
                                             size_t max_tokens) const;

    /// Rule-based pre-tokenization; pieces concatenate back to the input.
    static std::vector<std::string> pretokenize(const std::string& text);

private:
    Tokenizer() = default;
    void encode_piece(const std::string& piece, std::vector<int>* ids) const;

    std::string name_;
    std::unordered_map<std::string, int> ranks_;
};

} // namespace dora::corpus
