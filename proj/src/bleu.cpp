#include "mtmetrics/bleu.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "mtmetrics/error.hpp"
#include "mtmetrics/parallel.hpp"

namespace mtmetrics {

void BleuConfig::validate() const {
  if (max_n < 1) throw InputError("BLEU max n-gram order must be at least 1");
  if (smoothing.method == SmoothingMethod::kAddK && !(smoothing.k > 0)) {
    throw InputError("add-k smoothing requires k > 0");
  }
}

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  for (std::size_t n = 0; n < matches.size(); ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  hyp_tokens += other.hyp_tokens;
  ref_tokens += other.ref_tokens;
  return *this;
}

std::string_view smoothing_name(SmoothingMethod method) {
  switch (method) {
    case SmoothingMethod::kNone: return "none";
    case SmoothingMethod::kAddK: return "add-k";
    case SmoothingMethod::kExponential: return "exp";
  }
  return "?";
}

SmoothingMethod parse_smoothing(std::string_view name) {
  if (name == "none") return SmoothingMethod::kNone;
  if (name == "exp") return SmoothingMethod::kExponential;
  if (name == "add-k") return SmoothingMethod::kAddK;
  throw InputError(fmt::format("unknown smoothing '{}' (expected none, exp, add-k)", name));
}

BleuStats segment_stats(const TokenSequence& hyp, const TokenSequence& ref, std::size_t max_n) {
  BleuStats stats(max_n);
  stats.hyp_tokens = static_cast<std::int64_t>(hyp.size());
  stats.ref_tokens = static_cast<std::int64_t>(ref.size());
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (hyp.size() < n) break;
    const NGramProfile hyp_grams = extract_ngrams(hyp, n);
    const NGramProfile ref_grams = extract_ngrams(ref, n);
    std::int64_t matched = 0;
    for (const auto& [gram, count] : hyp_grams.counts) {
      auto it = ref_grams.counts.find(gram);
      if (it != ref_grams.counts.end()) matched += std::min(count, it->second);
    }
    stats.matches[n - 1] = matched;
    stats.totals[n - 1] = static_cast<std::int64_t>(hyp.size() - n + 1);
  }
  return stats;
}

double brevity_penalty(std::int64_t hyp_tokens, std::int64_t ref_tokens) {
  if (hyp_tokens >= ref_tokens) return 1.0;
  if (hyp_tokens == 0) return 0.0;
  return std::exp(1.0 - static_cast<double>(ref_tokens) / static_cast<double>(hyp_tokens));
}

BleuReport bleu_from_stats(const BleuStats& stats, const BleuConfig& config) {
  config.validate();
  BleuReport report;
  report.hyp_tokens = stats.hyp_tokens;
  report.ref_tokens = stats.ref_tokens;
  report.bp = brevity_penalty(stats.hyp_tokens, stats.ref_tokens);
  report.signature = signature(config);

  const std::size_t orders = config.max_n;
  report.precisions.assign(orders, 0.0);
  double exp_denominator = 1.0;
  for (std::size_t n = 0; n < orders; ++n) {
    const std::int64_t m = n < stats.matches.size() ? stats.matches[n] : 0;
    const std::int64_t t = n < stats.totals.size() ? stats.totals[n] : 0;
    if (m > 0) {
      report.precisions[n] = 100.0 * static_cast<double>(m) / static_cast<double>(t);
      continue;
    }
    // Zero-match order, including orders with no hypothesis n-grams.
    switch (config.smoothing.method) {
      case SmoothingMethod::kNone:
        break;
      case SmoothingMethod::kAddK:
        report.precisions[n] =
            100.0 * config.smoothing.k / (static_cast<double>(t) + config.smoothing.k);
        break;
      case SmoothingMethod::kExponential:
        exp_denominator *= 2.0;
        report.precisions[n] = 100.0 / (exp_denominator * static_cast<double>(std::max<std::int64_t>(t, 1)));
        break;
    }
  }

  if (std::any_of(report.precisions.begin(), report.precisions.end(),
                  [](double p) { return p <= 0.0; })) {
    report.score = 0.0;
    return report;
  }
  double log_sum = 0.0;
  for (double p : report.precisions) log_sum += std::log(p / 100.0);
  report.score = 100.0 * report.bp * std::exp(log_sum / static_cast<double>(orders));
  return report;
}

BleuReport bleu_corpus(std::span<const std::string> hyps, std::span<const std::string> refs,
                       const BleuConfig& config, unsigned threads) {
  config.validate();
  if (hyps.size() != refs.size()) {
    throw InputError(fmt::format("hypothesis has {} segments but reference has {}", hyps.size(),
                                 refs.size()));
  }
  if (hyps.empty()) throw InputError("BLEU corpus is empty");

  std::vector<BleuStats> per_segment(hyps.size(), BleuStats(config.max_n));
  parallel_for(hyps.size(), threads, [&](std::size_t i) {
    per_segment[i] = segment_stats(tokenize(hyps[i], config.tokenizer),
                                   tokenize(refs[i], config.tokenizer), config.max_n);
  });
  BleuStats total(config.max_n);
  for (const auto& s : per_segment) total += s;
  if (total.hyp_tokens == 0) throw InputError("all hypotheses are empty");
  return bleu_from_stats(total, config);
}

std::string signature(const BleuConfig& config) {
  return fmt::format("BLEU|case:{}|tok:{}|smooth:{}|n:{}|refs:1",
                     config.tokenizer.lowercase() ? "lc" : "mixed",
                     scheme_name(config.tokenizer.scheme()),
                     smoothing_name(config.smoothing.method), config.max_n);
}

}  // namespace mtmetrics
