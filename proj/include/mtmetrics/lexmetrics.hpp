#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "mtmetrics/hlepor.hpp"
#include "mtmetrics/textnorm.hpp"

namespace mtmetrics {

struct RougeLScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t lcs_len = 0;
};

struct MeteorParams {
  double alpha = 0.9;  // recall weight, in (0,1)
  double beta = 3.0;   // fragmentation exponent
  double gamma = 0.5;  // fragmentation weight, in [0,1)

  void validate() const;
  std::string to_string() const;
  // "alpha,beta,gamma"; throws InputError on malformed input.
  static MeteorParams parse(std::string_view text);
};

struct MeteorBreakdown {
  std::size_t matches = 0;
  std::size_t chunks = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_mean = 0.0;
  double penalty = 0.0;
  double score = 0.0;
};

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);
std::size_t lcs_length(const TokenSequence& a, const TokenSequence& b);

// Empty against empty scores F1 = 1.
RougeLScore rouge_l_f1(const TokenSequence& hyp, const TokenSequence& ref);

// Runs of consecutive hypothesis positions whose reference partners are
// also consecutive and in the same order.
std::size_t count_chunks(const AlignmentMap& alignment);

MeteorBreakdown meteor_exact_breakdown(const TokenSequence& hyp, const TokenSequence& ref,
                                       const MeteorParams& params = {});
double meteor_exact(const TokenSequence& hyp, const TokenSequence& ref,
                    const MeteorParams& params = {});

}  // namespace mtmetrics
