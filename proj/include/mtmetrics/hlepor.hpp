#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtmetrics/textnorm.hpp"

namespace mtmetrics {

struct HleporParams {
  double alpha = 9.0;  // recall weight in HPR
  double beta = 1.0;   // precision weight in HPR
  int n = 2;           // context window order; carried, not used by exact alignment
  double w_lp = 2.0;
  double w_npp = 1.0;
  double w_hpr = 3.0;

  // Throws InputError unless all weights are strictly positive and n >= 1.
  void validate() const;

  // "alpha,beta,n,wlp,wnpp,whpr" with shortest round-trip formatting.
  std::string to_string() const;
  // Inverse of to_string(); throws InputError on malformed input.
  static HleporParams parse(std::string_view text);

  friend bool operator==(const HleporParams&, const HleporParams&) = default;
};

enum class LanguagePair { kEnCs, kEnRu, kEnDe, kCsEn, kEsEn, kRuEn, kDeEn, kFrEn, kEnEs, kEnFr };

std::string_view language_pair_name(LanguagePair pair);
// Throws InputError listing the available names.
LanguagePair parse_language_pair(std::string_view name);
std::span<const LanguagePair> all_language_pairs();

// Word-level defaults tuned per language pair.
HleporParams preset(LanguagePair pair);
HleporParams preset(std::string_view name);

// Injective matching of hypothesis to reference positions over equal
// tokens, sorted by hypothesis index.
struct AlignmentMap {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  friend bool operator==(const AlignmentMap&, const AlignmentMap&) = default;
};

struct HleporBreakdown {
  double lp = 0.0;
  double npd = 0.0;
  double npos_penal = 1.0;
  double precision = 0.0;
  double recall = 0.0;
  double hpr = 0.0;
  double score = 0.0;
  std::size_t aligned = 0;
};

// Piecewise exponential length penalty. Throws InputError if both are 0.
double length_penalty(std::size_t hyp_len, std::size_t ref_len);

// Maximum-cardinality matching over equal tokens with minimum total
// normalized position difference. Ties go to the lexicographically
// smallest pair list.
AlignmentMap align(std::span<const std::string> hyp, std::span<const std::string> ref);
AlignmentMap align(const TokenSequence& hyp, const TokenSequence& ref);

// |(i+1)/hyp_len - (j+1)/ref_len| for one pair, scaled by hyp_len*ref_len
// so that sums are exact integers.
std::int64_t scaled_position_difference(std::size_t hyp_index, std::size_t ref_index,
                                        std::size_t hyp_len, std::size_t ref_len);
std::int64_t scaled_position_difference(const AlignmentMap& alignment, std::size_t hyp_len,
                                        std::size_t ref_len);

// Normalized position difference over matched pairs (1-based positions
// divided by their own sequence length), averaged over hyp_len.
double npd(const AlignmentMap& alignment, std::size_t hyp_len, std::size_t ref_len);

// Weighted harmonic mean of precision and recall.
double hpr(std::size_t aligned, std::size_t hyp_len, std::size_t ref_len, double alpha,
           double beta);

// (sum w) / (sum w/x); zero if any value is zero.
double weighted_harmonic_mean(std::span<const double> values, std::span<const double> weights);

HleporBreakdown hlepor_sentence(const TokenSequence& hyp, const TokenSequence& ref,
                                const HleporParams& params);

using SegmentPair = std::pair<TokenSequence, TokenSequence>;

// Mean sentence score on a 0-100 scale. `threads` == 0 or 1 runs
// sequentially; the mean is always summed in segment order.
double hlepor_corpus(std::span<const SegmentPair> pairs, const HleporParams& params,
                     unsigned threads = 1);

}  // namespace mtmetrics
