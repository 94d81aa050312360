#include "mtmetrics/hlepor.hpp"

#include <fmt/format.h>

#include <array>
#include <charconv>
#include <cmath>

#include "mtmetrics/error.hpp"
#include "mtmetrics/parallel.hpp"

namespace mtmetrics {

namespace {

constexpr std::array kPairs = {
    LanguagePair::kEnCs, LanguagePair::kEnRu, LanguagePair::kEnDe, LanguagePair::kCsEn,
    LanguagePair::kEsEn, LanguagePair::kRuEn, LanguagePair::kDeEn, LanguagePair::kFrEn,
    LanguagePair::kEnEs, LanguagePair::kEnFr,
};

double parse_double(std::string_view field, std::string_view what) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError(fmt::format("malformed {} value '{}'", what, field));
  }
  return value;
}

}  // namespace

void HleporParams::validate() const {
  if (!(alpha > 0) || !(beta > 0) || !(w_lp > 0) || !(w_npp > 0) || !(w_hpr > 0)) {
    throw InputError("hLEPOR parameters alpha, beta and all weights must be positive");
  }
  if (n < 1) throw InputError("hLEPOR parameter n must be at least 1");
}

std::string HleporParams::to_string() const {
  return fmt::format("{},{},{},{},{},{}", alpha, beta, n, w_lp, w_npp, w_hpr);
}

HleporParams HleporParams::parse(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    fields.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 6) {
    throw InputError(fmt::format(
        "expected 6 comma-separated hLEPOR parameters (alpha,beta,n,wlp,wnpp,whpr), got {}",
        fields.size()));
  }
  HleporParams p;
  p.alpha = parse_double(fields[0], "alpha");
  p.beta = parse_double(fields[1], "beta");
  const double n = parse_double(fields[2], "n");
  if (n != std::floor(n) || n < 1 || n > 1e6) throw InputError("hLEPOR parameter n must be a positive integer");
  p.n = static_cast<int>(n);
  p.w_lp = parse_double(fields[3], "wlp");
  p.w_npp = parse_double(fields[4], "wnpp");
  p.w_hpr = parse_double(fields[5], "whpr");
  p.validate();
  return p;
}

std::string_view language_pair_name(LanguagePair pair) {
  switch (pair) {
    case LanguagePair::kEnCs: return "en-cs";
    case LanguagePair::kEnRu: return "en-ru";
    case LanguagePair::kEnDe: return "en-de";
    case LanguagePair::kCsEn: return "cs-en";
    case LanguagePair::kEsEn: return "es-en";
    case LanguagePair::kRuEn: return "ru-en";
    case LanguagePair::kDeEn: return "de-en";
    case LanguagePair::kFrEn: return "fr-en";
    case LanguagePair::kEnEs: return "en-es";
    case LanguagePair::kEnFr: return "en-fr";
  }
  return "?";
}

std::span<const LanguagePair> all_language_pairs() { return kPairs; }

LanguagePair parse_language_pair(std::string_view name) {
  std::string available;
  for (auto p : kPairs) {
    if (language_pair_name(p) == name) return p;
    if (!available.empty()) available += ", ";
    available += language_pair_name(p);
  }
  throw InputError(fmt::format("unknown language pair '{}' (available: {})", name, available));
}

HleporParams preset(LanguagePair pair) {
  switch (pair) {
    case LanguagePair::kEnCs:
    case LanguagePair::kEnRu:
      return {9.0, 1.0, 2, 2.0, 1.0, 7.0};
    case LanguagePair::kEnDe:
      return {9.0, 1.0, 2, 3.0, 7.0, 1.0};
    case LanguagePair::kCsEn:
    case LanguagePair::kEsEn:
    case LanguagePair::kRuEn:
      return {1.0, 9.0, 2, 2.0, 1.0, 7.0};
    case LanguagePair::kDeEn:
    case LanguagePair::kFrEn:
    case LanguagePair::kEnEs:
    case LanguagePair::kEnFr:
      return {9.0, 1.0, 2, 2.0, 1.0, 3.0};
  }
  throw InputError("unknown language pair");
}

HleporParams preset(std::string_view name) { return preset(parse_language_pair(name)); }

double length_penalty(std::size_t hyp_len, std::size_t ref_len) {
  if (hyp_len == 0 && ref_len == 0) {
    throw InputError("length penalty undefined for two empty segments");
  }
  if (hyp_len == ref_len) return 1.0;
  // The formula tends to 0 as either length goes to 0.
  if (hyp_len == 0 || ref_len == 0) return 0.0;
  const double h = static_cast<double>(hyp_len);
  const double r = static_cast<double>(ref_len);
  return hyp_len < ref_len ? std::exp(1.0 - r / h) : std::exp(1.0 - h / r);
}

double npd(const AlignmentMap& alignment, std::size_t hyp_len, std::size_t ref_len) {
  if (hyp_len == 0 || ref_len == 0) return 0.0;
  for (const auto& [h, r] : alignment.pairs) {
    if (h >= hyp_len || r >= ref_len) throw InputError("alignment index out of range");
  }
  const double scale = static_cast<double>(hyp_len) * static_cast<double>(ref_len);
  const auto sum = static_cast<double>(scaled_position_difference(alignment, hyp_len, ref_len));
  return sum / scale / static_cast<double>(hyp_len);
}

double hpr(std::size_t aligned, std::size_t hyp_len, std::size_t ref_len, double alpha,
           double beta) {
  if (aligned == 0) return 0.0;
  if (aligned > hyp_len || aligned > ref_len) {
    throw InputError("aligned count exceeds a segment length");
  }
  const double p = static_cast<double>(aligned) / static_cast<double>(hyp_len);
  const double r = static_cast<double>(aligned) / static_cast<double>(ref_len);
  return ((alpha + beta) * p * r) / (alpha * p + beta * r);
}

double weighted_harmonic_mean(std::span<const double> values, std::span<const double> weights) {
  double wsum = 0.0;
  double denom = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] <= 0.0) return 0.0;
    wsum += weights[k];
    denom += weights[k] / values[k];
  }
  return wsum / denom;
}

HleporBreakdown hlepor_sentence(const TokenSequence& hyp, const TokenSequence& ref,
                                const HleporParams& params) {
  params.validate();
  const std::size_t lh = hyp.size();
  const std::size_t lr = ref.size();
  if (lh == 0 && lr == 0) throw InputError("cannot score two empty segments");

  HleporBreakdown out;
  out.lp = length_penalty(lh, lr);
  const AlignmentMap alignment = align(hyp, ref);
  out.aligned = alignment.size();
  out.npd = npd(alignment, lh, lr);
  out.npos_penal = std::exp(-out.npd);
  if (lh > 0) out.precision = static_cast<double>(out.aligned) / static_cast<double>(lh);
  if (lr > 0) out.recall = static_cast<double>(out.aligned) / static_cast<double>(lr);
  out.hpr = hpr(out.aligned, lh, lr, params.alpha, params.beta);

  const std::array values{out.lp, out.npos_penal, out.hpr};
  const std::array weights{params.w_lp, params.w_npp, params.w_hpr};
  out.score = weighted_harmonic_mean(values, weights);
  return out;
}

double hlepor_corpus(std::span<const SegmentPair> pairs, const HleporParams& params,
                     unsigned threads) {
  if (pairs.empty()) throw InputError("hLEPOR corpus is empty");
  params.validate();
  std::vector<double> scores(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    scores[i] = hlepor_sentence(pairs[i].first, pairs[i].second, params).score;
  });
  double sum = 0.0;
  for (double s : scores) sum += s;
  return 100.0 * sum / static_cast<double>(scores.size());
}

}  // namespace mtmetrics
