#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mtmetrics/textnorm.hpp"

namespace mtmetrics {

enum class SmoothingMethod { kNone, kAddK, kExponential };

struct Smoothing {
  SmoothingMethod method = SmoothingMethod::kNone;
  double k = 1.0;  // used by kAddK only

  static Smoothing none() { return {}; }
  static Smoothing add_k(double k) { return {SmoothingMethod::kAddK, k}; }
  static Smoothing exponential() { return {SmoothingMethod::kExponential, 1.0}; }
};

struct BleuConfig {
  std::size_t max_n = 4;
  Smoothing smoothing;
  TokenizerConfig tokenizer;

  void validate() const;
};

// Clipped match and total counts per order, summed over segments.
struct BleuStats {
  std::vector<std::int64_t> matches;
  std::vector<std::int64_t> totals;
  std::int64_t hyp_tokens = 0;
  std::int64_t ref_tokens = 0;

  explicit BleuStats(std::size_t max_n = 4) : matches(max_n, 0), totals(max_n, 0) {}
  BleuStats& operator+=(const BleuStats& other);
};

struct BleuReport {
  std::vector<double> precisions;  // 0-100, one per order
  double bp = 1.0;
  double score = 0.0;  // 0-100
  std::int64_t hyp_tokens = 0;
  std::int64_t ref_tokens = 0;
  std::string signature;
};

BleuStats segment_stats(const TokenSequence& hyp, const TokenSequence& ref, std::size_t max_n);

double brevity_penalty(std::int64_t hyp_tokens, std::int64_t ref_tokens);

// Scores pre-accumulated statistics; no validation of corpus shape.
BleuReport bleu_from_stats(const BleuStats& stats, const BleuConfig& config);

// Throws InputError on length mismatch, an empty corpus, or when every
// hypothesis is empty.
BleuReport bleu_corpus(std::span<const std::string> hyps, std::span<const std::string> refs,
                       const BleuConfig& config, unsigned threads = 1);

// BLEU|case:<lc|mixed>|tok:<13a|ws|none>|smooth:<none|add-k|exp>|n:<max_n>|refs:1
std::string signature(const BleuConfig& config);

std::string_view smoothing_name(SmoothingMethod method);
// Accepts "none", "exp", "add-k".
SmoothingMethod parse_smoothing(std::string_view name);

}  // namespace mtmetrics
