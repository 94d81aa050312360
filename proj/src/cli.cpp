#include "mtmetrics/cli.hpp"

#include <fmt/format.h>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "mtmetrics/error.hpp"
#include "mtmetrics/evalharness.hpp"

namespace mtmetrics {

namespace {

// Flags shared by `score` and `compare`.
struct MetricOptions {
  std::string tokenize = "13a";
  bool lowercase = true;
  std::string lang_pair;
  std::string hlepor_params;
  std::size_t max_n = 4;
  std::string smoothing = "none";
  double smooth_k = 1.0;
  std::string meteor_params;
  bool segment_bleu = false;
  std::optional<unsigned> threads;
  std::string format = "table";

  void attach(CLI::App& app) {
    app.add_option("--tokenize", tokenize, "Tokenizer: 13a, ws, none")->capture_default_str();
    app.add_flag("--lowercase,!--no-lowercase", lowercase, "Lowercase tokens (default on)");
    app.add_option("--lang-pair", lang_pair, "hLEPOR preset, e.g. en-es, de-en");
    app.add_option("--hlepor-params", hlepor_params, "alpha,beta,n,wlp,wnpp,whpr");
    app.add_option("--max-n", max_n, "BLEU maximum n-gram order")->capture_default_str();
    app.add_option("--smoothing", smoothing, "BLEU smoothing: none, exp, add-k")->capture_default_str();
    app.add_option("--smooth-k", smooth_k, "k for add-k smoothing")->capture_default_str();
    app.add_option("--meteor-params", meteor_params, "alpha,beta,gamma");
    app.add_flag("--segment-bleu", segment_bleu, "Also emit smoothed sentence-level BLEU");
    app.add_option("--threads", threads, "Worker threads (overrides MTMETRICS_THREADS)");
    app.add_option("--format", format, "Output format: table, json")->capture_default_str();
  }

  EvalConfig resolve() const {
    EvalConfig cfg;
    cfg.tokenizer = TokenizerConfig(parse_scheme(tokenize), lowercase);
    if (!lang_pair.empty()) {
      cfg.hlepor = preset(lang_pair);
      cfg.lang_pair = lang_pair;
    }
    if (!hlepor_params.empty()) {
      cfg.hlepor = HleporParams::parse(hlepor_params);
      cfg.lang_pair.clear();
    }
    cfg.bleu_max_n = max_n;
    cfg.bleu_smoothing = {parse_smoothing(smoothing), smooth_k};
    if (!meteor_params.empty()) cfg.meteor = MeteorParams::parse(meteor_params);
    cfg.segment_bleu = segment_bleu;
    cfg.threads = resolve_threads();
    cfg.bleu_config().validate();
    return cfg;
  }

  unsigned resolve_threads() const {
    if (threads) return *threads;
    if (const char* env = std::getenv("MTMETRICS_THREADS"); env && *env) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (*end != '\0' || v < 0) {
        throw InputError(fmt::format("MTMETRICS_THREADS must be a non-negative integer, got '{}'", env));
      }
      return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }
};

ParallelText load_inputs(const std::string& hyp, const std::string& ref, const std::string& tsv) {
  if (!tsv.empty()) {
    if (!hyp.empty() || !ref.empty()) throw InputError("--tsv cannot be combined with --hyp/--ref");
    return read_tsv(tsv);
  }
  if (hyp.empty()) throw InputError("--hyp is required (or --tsv)");
  if (ref.empty()) throw InputError("--ref is required (or --tsv)");
  return read_parallel(hyp, ref);
}

std::string version_text() {
  return fmt::format("mtmetrics {} (signature format {})\n", kToolkitVersion,
                     kSignatureFormatVersion);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Machine translation evaluation: hLEPOR, BLEU, ROUGE-L, METEOR (exact)"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print toolkit and signature-format versions");

  // score
  auto* score = app.add_subcommand("score", "Score a hypothesis file against a reference");
  MetricOptions score_opts;
  std::string metric;
  std::string hyp, ref, tsv;
  bool with_segments = false;
  score->add_option("--metric", metric, "bleu, hlepor, rouge-l, meteor (comma-separated)")->required();
  score->add_option("--hyp", hyp, "Hypothesis file, one segment per line");
  score->add_option("--ref", ref, "Reference file, line-aligned with --hyp");
  score->add_option("--tsv", tsv, "Two-column hyp<TAB>ref file instead of --hyp/--ref");
  score->add_flag("--segments", with_segments, "Include per-segment scores");
  score_opts.attach(*score);

  // compare
  auto* cmp = app.add_subcommand("compare", "Compare two systems and report improvement rates");
  MetricOptions cmp_opts;
  std::string before, after, cmp_ref;
  std::string metrics = "bleu,hlepor";
  int decimals = 2;
  cmp->add_option("--before", before, "Baseline hypothesis file")->required();
  cmp->add_option("--after", after, "Improved hypothesis file")->required();
  cmp->add_option("--ref", cmp_ref, "Reference file")->required();
  cmp->add_option("--metrics", metrics, "Comma-separated metric list")->capture_default_str();
  cmp->add_option("--decimals", decimals, "Rate rounding precision")->capture_default_str();
  cmp_opts.attach(*cmp);

  // matrix
  auto* mat = app.add_subcommand("matrix", "Per-task per-metric winners and metric agreement");
  std::string scores_path;
  std::string mat_format = "table";
  std::optional<int> round_decimals;
  mat->add_option("--scores", scores_path, "Score table JSON")->required();
  mat->add_option("--format", mat_format, "Output format: table, json")->capture_default_str();
  mat->add_option("--round", round_decimals, "Round values to N decimals before comparing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (show_version) {
      out << version_text();
      return kExitOk;
    }
    if (score->parsed()) {
      const EvalConfig cfg = score_opts.resolve();
      const ReportFormat format = parse_format(score_opts.format);
      const auto metric_list = parse_metric_list(metric);
      const ParallelText text = load_inputs(hyp, ref, tsv);
      const EvaluationResult result = evaluate_corpus(text.hyps, text.refs, metric_list, cfg);
      out << render_report(result, format, with_segments);
      return kExitOk;
    }
    if (cmp->parsed()) {
      const EvalConfig cfg = cmp_opts.resolve();
      const ReportFormat format = parse_format(cmp_opts.format);
      const auto metric_list = parse_metric_list(metrics);
      const ParallelText base = read_parallel(before, cmp_ref);
      const ParallelText improved = read_parallel(after, cmp_ref);
      const auto r0 = evaluate_corpus(base.hyps, base.refs, metric_list, cfg);
      const auto r1 = evaluate_corpus(improved.hyps, improved.refs, metric_list, cfg);
      RoundingPolicy rounding;
      rounding.decimals = decimals;
      out << render_report(compare(r0, r1, rounding), format);
      return kExitOk;
    }
    if (mat->parsed()) {
      const ReportFormat format = parse_format(mat_format);
      std::ifstream in(scores_path, std::ios::binary);
      if (!in) throw InputError(fmt::format("--scores: cannot open '{}'", scores_path));
      std::ostringstream buf;
      buf << in.rdbuf();
      if (buf.str().find_first_not_of(" \t\r\n") == std::string::npos) {
        throw InputError(fmt::format("--scores: '{}' is empty", scores_path));
      }
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(buf.str());
      } catch (const nlohmann::json::parse_error& e) {
        throw InputError(fmt::format("--scores: malformed JSON at byte {}: {}", e.byte, e.what()));
      }
      WinnerOptions options;
      if (round_decimals) options.rounding = RoundingPolicy{*round_decimals};
      out << render_report(winner_matrix(ScoreTable::from_json(doc), options), format);
      return kExitOk;
    }
    out << app.help();
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace mtmetrics
