#include "mtmetrics/lexmetrics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "mtmetrics/error.hpp"

namespace mtmetrics {

void MeteorParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("METEOR alpha must be in (0,1)");
  if (!(beta > 0.0)) throw InputError("METEOR beta must be positive");
  if (!(gamma >= 0.0 && gamma < 1.0)) throw InputError("METEOR gamma must be in [0,1)");
}

std::string MeteorParams::to_string() const {
  return fmt::format("{},{},{}", alpha, beta, gamma);
}

MeteorParams MeteorParams::parse(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto field = text.substr(start, comma - start);
    double v = 0.0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      throw InputError(fmt::format("malformed METEOR parameter '{}'", field));
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 3) {
    throw InputError("expected 3 comma-separated METEOR parameters (alpha,beta,gamma)");
  }
  MeteorParams p{values[0], values[1], values[2]};
  p.validate();
  return p;
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Two rows over the shorter sequence.
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::size_t lcs_length(const TokenSequence& a, const TokenSequence& b) {
  return lcs_length(std::span<const std::string>(a.tokens()),
                    std::span<const std::string>(b.tokens()));
}

RougeLScore rouge_l_f1(const TokenSequence& hyp, const TokenSequence& ref) {
  RougeLScore out;
  if (hyp.empty() && ref.empty()) {
    out.precision = out.recall = out.f1 = 1.0;
    return out;
  }
  out.lcs_len = lcs_length(hyp, ref);
  if (out.lcs_len == 0) return out;
  const auto lcs = static_cast<double>(out.lcs_len);
  out.precision = lcs / static_cast<double>(hyp.size());
  out.recall = lcs / static_cast<double>(ref.size());
  out.f1 = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  return out;
}

std::size_t count_chunks(const AlignmentMap& alignment) {
  std::size_t chunks = 0;
  for (std::size_t k = 0; k < alignment.pairs.size(); ++k) {
    const auto [h, r] = alignment.pairs[k];
    const bool continues = k > 0 && h == alignment.pairs[k - 1].first + 1 &&
                           r == alignment.pairs[k - 1].second + 1;
    if (!continues) ++chunks;
  }
  return chunks;
}

MeteorBreakdown meteor_exact_breakdown(const TokenSequence& hyp, const TokenSequence& ref,
                                       const MeteorParams& params) {
  params.validate();
  MeteorBreakdown out;
  const AlignmentMap alignment = align(hyp, ref);
  out.matches = alignment.size();
  if (out.matches == 0) return out;
  const auto m = static_cast<double>(out.matches);
  out.chunks = count_chunks(alignment);
  out.precision = m / static_cast<double>(hyp.size());
  out.recall = m / static_cast<double>(ref.size());
  out.f_mean = out.precision * out.recall /
               (params.alpha * out.precision + (1.0 - params.alpha) * out.recall);
  out.penalty = params.gamma * std::pow(static_cast<double>(out.chunks) / m, params.beta);
  out.score = out.f_mean * (1.0 - out.penalty);
  return out;
}

double meteor_exact(const TokenSequence& hyp, const TokenSequence& ref,
                    const MeteorParams& params) {
  return meteor_exact_breakdown(hyp, ref, params).score;
}

}  // namespace mtmetrics
