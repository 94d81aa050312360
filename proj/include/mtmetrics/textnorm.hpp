#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtmetrics {

enum class TokenizeScheme {
  kThirteenA,   // mteval-v13a punctuation splitting
  kWhitespace,  // split on ASCII whitespace only
  kNone,        // input already tokenized; only splits on whitespace
};

// Short name used in signatures and on the command line: "13a", "ws", "none".
std::string_view scheme_name(TokenizeScheme scheme);
// Accepts "13a", "ws", "whitespace", "none".
TokenizeScheme parse_scheme(std::string_view name);

class TokenizerConfig {
 public:
  TokenizerConfig() = default;
  TokenizerConfig(TokenizeScheme scheme, bool lowercase)
      : scheme_(scheme), lowercase_(lowercase) {}

  TokenizeScheme scheme() const { return scheme_; }
  bool lowercase() const { return lowercase_; }

  friend bool operator==(const TokenizerConfig&, const TokenizerConfig&) = default;

 private:
  TokenizeScheme scheme_ = TokenizeScheme::kThirteenA;
  bool lowercase_ = true;
};

class TokenSequence {
 public:
  TokenSequence() = default;
  // Throws InputError if any token is empty or contains whitespace.
  explicit TokenSequence(std::vector<std::string> tokens,
                         TokenizerConfig config = TokenizerConfig(TokenizeScheme::kNone, false));

  const std::vector<std::string>& tokens() const { return tokens_; }
  const TokenizerConfig& source_config() const { return config_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }

  // Tokens joined by single spaces.
  std::string joined() const;

  friend bool operator==(const TokenSequence& a, const TokenSequence& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  friend TokenSequence tokenize(std::string_view, const TokenizerConfig&);
  struct Unchecked {};
  TokenSequence(Unchecked, std::vector<std::string> tokens, TokenizerConfig config)
      : tokens_(std::move(tokens)), config_(config) {}

  std::vector<std::string> tokens_;
  TokenizerConfig config_{TokenizeScheme::kNone, false};
};

using NGram = std::vector<std::string>;

struct NGramProfile {
  std::size_t order = 1;
  std::map<NGram, std::int64_t> counts;

  std::int64_t total() const;
};

TokenSequence tokenize(std::string_view text, const TokenizerConfig& config);

// Throws InputError when n == 0.
NGramProfile extract_ngrams(const TokenSequence& seq, std::size_t n);

// The 13a string transformation alone, before splitting and lowercasing.
std::string normalize_13a(std::string_view text);

// Simple one-to-one case mapping for ASCII, Latin-1, Latin Extended-A,
// Greek and Cyrillic. Other code points pass through unchanged.
std::string lowercase_utf8(std::string_view text);

// Byte offset of the first malformed UTF-8 sequence, or nullopt if valid.
std::optional<std::size_t> find_invalid_utf8(std::string_view text);

bool is_ascii_space(char c);

}  // namespace mtmetrics
