#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "mtmetrics/bleu.hpp"
#include "mtmetrics/hlepor.hpp"
#include "mtmetrics/lexmetrics.hpp"
#include "mtmetrics/textnorm.hpp"

namespace mtmetrics {

inline constexpr std::string_view kToolkitVersion = "1.0.0";
inline constexpr int kSignatureFormatVersion = 1;

// ---------------------------------------------------------------------------
// Inputs

enum class Metric { kBleu, kHlepor, kRougeL, kMeteor };

std::string_view metric_id(Metric metric);
// Accepts "bleu", "hlepor", "rouge-l", "meteor".
Metric parse_metric(std::string_view id);
// Comma-separated list; duplicates are dropped, first occurrence wins.
std::vector<Metric> parse_metric_list(std::string_view ids);

struct ParallelText {
  std::vector<std::string> hyps;
  std::vector<std::string> refs;
};

// One segment per line; a trailing newline does not start a new segment and
// CR before LF is dropped. Throws InputError on unreadable files or
// malformed UTF-8 (naming the line).
std::vector<std::string> read_lines(const std::filesystem::path& path);
// Throws InputError naming both line counts when they differ.
ParallelText read_parallel(const std::filesystem::path& hyp, const std::filesystem::path& ref);
// hyp<TAB>ref per line.
ParallelText read_tsv(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Corpus evaluation

struct EvalConfig {
  TokenizerConfig tokenizer;
  HleporParams hlepor = preset(LanguagePair::kEnEs);
  std::string lang_pair = "en-es";  // empty when parameters were given explicitly
  std::size_t bleu_max_n = 4;
  Smoothing bleu_smoothing;
  MeteorParams meteor;
  // Sentence-level BLEU stream; always uses exponential smoothing.
  bool segment_bleu = false;
  unsigned threads = 1;

  BleuConfig bleu_config() const;
  // Omits `threads`, which never affects results.
  nlohmann::json to_json() const;
};

struct MetricResult {
  double corpus = 0.0;
  std::optional<std::vector<double>> segments;
  std::optional<BleuReport> bleu;
};

struct EvaluationResult {
  std::string signature;
  std::vector<Metric> order;
  std::map<std::string, MetricResult> metrics;
  nlohmann::json config;
  std::size_t segments = 0;
  std::int64_t hyp_tokens = 0;
  std::int64_t ref_tokens = 0;
};

// Per-metric settings signature, e.g. "hLEPOR|case:lc|tok:13a|params:...".
std::string metric_signature(Metric metric, const EvalConfig& config);
std::string run_signature(std::span<const Metric> metrics, const EvalConfig& config);

// hLEPOR and BLEU on 0-100, ROUGE-L and METEOR on 0-1. Segment-level
// metrics report the mean of their segment scores as the corpus value.
EvaluationResult evaluate_corpus(std::span<const std::string> hyps,
                                 std::span<const std::string> refs,
                                 std::span<const Metric> metrics, const EvalConfig& config);

// ---------------------------------------------------------------------------
// Before/after comparison

struct RoundingPolicy {
  enum class Mode { kHalfUp, kHalfEven };
  int decimals = 2;
  Mode mode = Mode::kHalfUp;

  // Half-up rounds ties away from zero.
  double apply(double value) const;
};

// 100 * (after - before) / before, rounded. Throws InputError if before <= 0.
double improvement_rate(double before, double after, const RoundingPolicy& rounding = {});

struct ComparisonRow {
  std::string metric_id;
  double before = 0.0;
  double after = 0.0;
  std::optional<double> rate_percent;  // absent when before <= 0
};

struct ComparisonReport {
  std::string signature;
  std::vector<ComparisonRow> rows;
};

ComparisonReport compare(const EvaluationResult& before, const EvaluationResult& after,
                         const RoundingPolicy& rounding = {});

// ---------------------------------------------------------------------------
// Winner matrix

struct ScoreRow {
  std::string system;
  std::string task;
  std::string metric;
  double value = 0.0;
};

class ScoreTable {
 public:
  // Throws InputError on a duplicate (system, task, metric) triple.
  void add(ScoreRow row);
  void set_scale(const std::string& metric, std::string scale) { scales_[metric] = std::move(scale); }

  const std::vector<ScoreRow>& rows() const { return rows_; }
  const std::map<std::string, std::string>& scales() const { return scales_; }
  bool empty() const { return rows_.empty(); }

  // {"rows": [{"system","task","metric","value"}...], "scales": {...}}
  nlohmann::json to_json() const;
  static ScoreTable from_json(const nlohmann::json& doc);

 private:
  std::vector<ScoreRow> rows_;
  std::set<std::tuple<std::string, std::string, std::string>> keys_;
  std::map<std::string, std::string> scales_;
};

struct WinnerCell {
  std::string task;
  std::string metric;
  std::string winner;  // system id, or WinnerMatrix::kTie
  std::vector<std::string> tied;
  double best = 0.0;

  bool is_tie() const { return !tied.empty(); }
};

struct MissingCell {
  std::string task;
  std::string metric;
  std::string system;
};

struct MetricAgreement {
  std::string metric_a;
  std::string metric_b;
  std::size_t compared = 0;
  std::size_t agreed = 0;
  std::vector<std::string> disagreed_tasks;

  double fraction() const {
    return compared == 0 ? 0.0 : static_cast<double>(agreed) / static_cast<double>(compared);
  }
};

struct WinnerMatrix {
  static constexpr std::string_view kTie = "(tie)";

  std::string signature;  // records the comparison rounding
  std::vector<std::string> systems;
  std::vector<std::string> tasks;
  std::vector<std::string> metrics;
  std::vector<WinnerCell> cells;  // sorted by (task, metric)
  std::vector<MissingCell> missing;
  std::vector<MetricAgreement> agreement;  // sorted by (metric_a, metric_b)

  const WinnerCell* cell(std::string_view task, std::string_view metric) const;
  const MetricAgreement* agreement_between(std::string_view a, std::string_view b) const;
};

struct WinnerOptions {
  // Applied to values before comparison; exact comparison when unset.
  std::optional<RoundingPolicy> rounding;
};

// Every metric is treated as higher-is-better.
WinnerMatrix winner_matrix(const ScoreTable& table, const WinnerOptions& options = {});

// ---------------------------------------------------------------------------
// Rendering

enum class ReportFormat { kTable, kJson };
ReportFormat parse_format(std::string_view name);

std::string render_report(const BleuReport& report, ReportFormat format);
std::string render_report(const EvaluationResult& result, ReportFormat format,
                          bool with_segments = false);
std::string render_report(const ComparisonReport& report, ReportFormat format);
std::string render_report(const ScoreTable& table, ReportFormat format);
std::string render_report(const WinnerMatrix& matrix, ReportFormat format);

nlohmann::json to_json(const BleuReport& report);
nlohmann::json to_json(const EvaluationResult& result, bool with_segments = true);
nlohmann::json to_json(const ComparisonReport& report);
nlohmann::json to_json(const WinnerMatrix& matrix);

}  // namespace mtmetrics
