#include <fmt/format.h>

#include <algorithm>

#include "mtmetrics/error.hpp"
#include "mtmetrics/evalharness.hpp"
#include "mtmetrics/parallel.hpp"

namespace mtmetrics {

std::string_view metric_id(Metric metric) {
  switch (metric) {
    case Metric::kBleu: return "bleu";
    case Metric::kHlepor: return "hlepor";
    case Metric::kRougeL: return "rouge-l";
    case Metric::kMeteor: return "meteor";
  }
  return "?";
}

Metric parse_metric(std::string_view id) {
  if (id == "bleu") return Metric::kBleu;
  if (id == "hlepor") return Metric::kHlepor;
  if (id == "rouge-l") return Metric::kRougeL;
  if (id == "meteor") return Metric::kMeteor;
  throw InputError(fmt::format("unknown metric '{}' (expected bleu, hlepor, rouge-l, meteor)", id));
}

std::vector<Metric> parse_metric_list(std::string_view ids) {
  std::vector<Metric> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = ids.find(',', start);
    const auto m = parse_metric(ids.substr(start, comma - start));
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

BleuConfig EvalConfig::bleu_config() const {
  BleuConfig c;
  c.max_n = bleu_max_n;
  c.smoothing = bleu_smoothing;
  c.tokenizer = tokenizer;
  return c;
}

nlohmann::json EvalConfig::to_json() const {
  nlohmann::json j;
  j["tokenize"] = std::string(scheme_name(tokenizer.scheme()));
  j["lowercase"] = tokenizer.lowercase();
  j["bleu_max_n"] = bleu_max_n;
  j["bleu_smoothing"] = std::string(smoothing_name(bleu_smoothing.method));
  if (bleu_smoothing.method == SmoothingMethod::kAddK) j["bleu_smoothing_k"] = bleu_smoothing.k;
  j["segment_bleu"] = segment_bleu;
  j["hlepor_params"] = hlepor.to_string();
  if (!lang_pair.empty()) j["lang_pair"] = lang_pair;
  j["meteor_params"] = meteor.to_string();
  j["version"] = std::string(kToolkitVersion);
  j["signature_format"] = kSignatureFormatVersion;
  return j;
}

std::string metric_signature(Metric metric, const EvalConfig& config) {
  const char* lc = config.tokenizer.lowercase() ? "lc" : "mixed";
  const auto tok = scheme_name(config.tokenizer.scheme());
  switch (metric) {
    case Metric::kBleu: {
      std::string s = signature(config.bleu_config());
      if (config.bleu_smoothing.method == SmoothingMethod::kAddK) {
        s += fmt::format("|k:{}", config.bleu_smoothing.k);
      }
      return s;
    }
    case Metric::kHlepor:
      return fmt::format("hLEPOR|case:{}|tok:{}|params:{}|agg:mean|refs:1", lc, tok,
                         config.hlepor.to_string());
    case Metric::kRougeL:
      return fmt::format("ROUGE-L|case:{}|tok:{}|f:1|refs:1", lc, tok);
    case Metric::kMeteor:
      return fmt::format("METEOR-exact|case:{}|tok:{}|params:{}|refs:1", lc, tok,
                         config.meteor.to_string());
  }
  return {};
}

std::string run_signature(std::span<const Metric> metrics, const EvalConfig& config) {
  std::string out;
  for (auto m : metrics) {
    if (!out.empty()) out += " + ";
    out += metric_signature(m, config);
  }
  return out;
}

EvaluationResult evaluate_corpus(std::span<const std::string> hyps,
                                 std::span<const std::string> refs,
                                 std::span<const Metric> metrics, const EvalConfig& config) {
  if (hyps.size() != refs.size()) {
    throw InputError(fmt::format("line-count mismatch: hypothesis has {} lines, reference has {} lines",
                                 hyps.size(), refs.size()));
  }
  if (hyps.empty()) throw InputError("corpus is empty");
  if (metrics.empty()) throw InputError("no metrics requested");
  config.hlepor.validate();
  config.meteor.validate();
  const BleuConfig bleu_cfg = config.bleu_config();
  bleu_cfg.validate();

  const std::size_t n = hyps.size();
  const unsigned threads = config.threads;

  std::vector<TokenSequence> hyp_toks(n);
  std::vector<TokenSequence> ref_toks(n);
  parallel_for(n, threads, [&](std::size_t i) {
    hyp_toks[i] = tokenize(hyps[i], config.tokenizer);
    ref_toks[i] = tokenize(refs[i], config.tokenizer);
  });

  EvaluationResult result;
  result.signature = run_signature(metrics, config);
  result.order.assign(metrics.begin(), metrics.end());
  result.config = config.to_json();
  result.segments = n;
  for (std::size_t i = 0; i < n; ++i) {
    result.hyp_tokens += static_cast<std::int64_t>(hyp_toks[i].size());
    result.ref_tokens += static_cast<std::int64_t>(ref_toks[i].size());
  }

  auto mean = [](const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
  };

  for (Metric metric : metrics) {
    MetricResult mr;
    std::vector<double> seg(n, 0.0);
    switch (metric) {
      case Metric::kBleu: {
        std::vector<BleuStats> stats(n, BleuStats(bleu_cfg.max_n));
        parallel_for(n, threads, [&](std::size_t i) {
          stats[i] = segment_stats(hyp_toks[i], ref_toks[i], bleu_cfg.max_n);
        });
        BleuStats total(bleu_cfg.max_n);
        for (const auto& s : stats) total += s;
        if (total.hyp_tokens == 0) throw InputError("all hypotheses are empty");
        BleuReport report = bleu_from_stats(total, bleu_cfg);
        mr.corpus = report.score;
        if (config.segment_bleu) {
          BleuConfig sentence_cfg = bleu_cfg;
          sentence_cfg.smoothing = Smoothing::exponential();
          for (std::size_t i = 0; i < n; ++i) seg[i] = bleu_from_stats(stats[i], sentence_cfg).score;
          mr.segments = std::move(seg);
        }
        mr.bleu = std::move(report);
        break;
      }
      case Metric::kHlepor: {
        parallel_for(n, threads, [&](std::size_t i) {
          // A blank line against a blank line counts as an exact match.
          seg[i] = (hyp_toks[i].empty() && ref_toks[i].empty())
                       ? 1.0
                       : hlepor_sentence(hyp_toks[i], ref_toks[i], config.hlepor).score;
        });
        mr.corpus = 100.0 * mean(seg);
        mr.segments = std::move(seg);
        break;
      }
      case Metric::kRougeL: {
        parallel_for(n, threads,
                     [&](std::size_t i) { seg[i] = rouge_l_f1(hyp_toks[i], ref_toks[i]).f1; });
        mr.corpus = mean(seg);
        mr.segments = std::move(seg);
        break;
      }
      case Metric::kMeteor: {
        parallel_for(n, threads, [&](std::size_t i) {
          seg[i] = meteor_exact(hyp_toks[i], ref_toks[i], config.meteor);
        });
        mr.corpus = mean(seg);
        mr.segments = std::move(seg);
        break;
      }
    }
    result.metrics.emplace(std::string(metric_id(metric)), std::move(mr));
  }
  return result;
}

}  // namespace mtmetrics
