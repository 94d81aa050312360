#include <fmt/format.h>

#include <algorithm>
#include <set>

#include "mtmetrics/error.hpp"
#include "mtmetrics/evalharness.hpp"

namespace mtmetrics {

namespace {

std::string order_label(std::size_t n) {
  switch (n) {
    case 1: return "uni-gram";
    case 2: return "bi-gram";
    case 3: return "tri-gram";
    default: return fmt::format("{}-gram", n);
  }
}

// Columns two spaces apart, each as wide as its widest cell. Right-aligned
// except for an optional left-aligned label column.
std::string format_columns(const std::vector<std::vector<std::string>>& rows,
                           bool label_column = true) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      if (c == 0 && label_column) {
        line += fmt::format("{:<{}}", row[c], width[c]);
      } else {
        line += fmt::format("{:>{}}", row[c], width[c]);
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

bool percent_scale(std::string_view metric) { return metric == "bleu" || metric == "hlepor"; }

std::string format_metric_value(std::string_view metric, double v) {
  return percent_scale(metric) ? fmt::format("{:.2f}", v) : fmt::format("{:.4f}", v);
}

std::string format_rate(const std::optional<double>& rate) {
  if (!rate) return "n/a";
  return fmt::format("{}{:.2f}%", *rate > 0 ? "+" : "", *rate);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "json") return ReportFormat::kJson;
  throw InputError(fmt::format("unknown format '{}' (expected table, json)", name));
}

nlohmann::json to_json(const BleuReport& report) {
  return {{"precisions", report.precisions}, {"bp", report.bp},
          {"score", report.score},           {"hyp_tokens", report.hyp_tokens},
          {"ref_tokens", report.ref_tokens}, {"signature", report.signature}};
}

std::string render_report(const BleuReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return dump(to_json(report));
  std::vector<std::string> header;
  std::vector<std::string> values;
  for (std::size_t n = 1; n <= report.precisions.size(); ++n) {
    header.push_back(order_label(n));
    values.push_back(fmt::format("{:.2f}", report.precisions[n - 1]));
  }
  header.insert(header.end(), {"BP", "Overall"});
  values.push_back(fmt::format("{:.2f}", report.bp));
  values.push_back(fmt::format("{:.2f}", report.score));
  std::string out = format_columns({header, values}, false);
  out += "signature: " + report.signature + "\n";
  return out;
}

nlohmann::json to_json(const EvaluationResult& result, bool with_segments) {
  nlohmann::json metrics = nlohmann::json::object();
  for (Metric m : result.order) {
    const std::string id(metric_id(m));
    const auto& mr = result.metrics.at(id);
    nlohmann::json entry{{"corpus", mr.corpus}};
    if (with_segments && mr.segments) entry["segments"] = *mr.segments;
    if (mr.bleu) {
      entry["precisions"] = mr.bleu->precisions;
      entry["bp"] = mr.bleu->bp;
    }
    metrics[id] = std::move(entry);
  }
  return {{"signature", result.signature},
          {"metrics", std::move(metrics)},
          {"config", result.config},
          {"counts",
           {{"segments", result.segments},
            {"hyp_tokens", result.hyp_tokens},
            {"ref_tokens", result.ref_tokens}}}};
}

std::string render_report(const EvaluationResult& result, ReportFormat format,
                          bool with_segments) {
  if (format == ReportFormat::kJson) return dump(to_json(result, with_segments));
  std::string out;
  std::vector<std::vector<std::string>> rows{{"metric", "corpus"}};
  for (Metric m : result.order) {
    const std::string id(metric_id(m));
    rows.push_back({id, format_metric_value(id, result.metrics.at(id).corpus)});
  }
  out += format_columns(rows);
  if (auto it = result.metrics.find("bleu"); it != result.metrics.end() && it->second.bleu) {
    out += "\n";
    out += render_report(*it->second.bleu, ReportFormat::kTable);
  }
  if (with_segments) {
    std::vector<std::vector<std::string>> seg_rows{{"segment"}};
    std::vector<const std::vector<double>*> streams;
    for (Metric m : result.order) {
      const std::string id(metric_id(m));
      const auto& mr = result.metrics.at(id);
      if (!mr.segments) continue;
      seg_rows[0].push_back(id);
      streams.push_back(&*mr.segments);
    }
    if (!streams.empty()) {
      for (std::size_t i = 0; i < result.segments; ++i) {
        std::vector<std::string> row{fmt::format("{}", i + 1)};
        for (const auto* s : streams) row.push_back(fmt::format("{:.4f}", (*s)[i]));
        seg_rows.push_back(std::move(row));
      }
      out += "\n" + format_columns(seg_rows);
    }
  }
  out += fmt::format("\nsegments: {}  hyp_tokens: {}  ref_tokens: {}\n", result.segments,
                     result.hyp_tokens, result.ref_tokens);
  out += "signature: " + result.signature + "\n";
  return out;
}

nlohmann::json to_json(const ComparisonReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row{{"metric", r.metric_id}, {"before", r.before}, {"after", r.after}};
    row["rate_percent"] = r.rate_percent ? nlohmann::json(*r.rate_percent) : nlohmann::json(nullptr);
    rows.push_back(std::move(row));
  }
  return {{"signature", report.signature}, {"rows", std::move(rows)}};
}

std::string render_report(const ComparisonReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return dump(to_json(report));
  std::vector<std::vector<std::string>> rows{{"metric", "before", "after", "rate"}};
  for (const auto& r : report.rows) {
    rows.push_back({r.metric_id, format_metric_value(r.metric_id, r.before),
                    format_metric_value(r.metric_id, r.after), format_rate(r.rate_percent)});
  }
  return format_columns(rows) + "signature: " + report.signature + "\n";
}

std::string render_report(const ScoreTable& table, ReportFormat format) {
  if (format == ReportFormat::kJson) return dump(table.to_json());
  if (table.empty()) return "(empty score table)\n";
  std::set<std::string> metric_set;
  std::set<std::pair<std::string, std::string>> keys;
  std::map<std::tuple<std::string, std::string, std::string>, double> value;
  for (const auto& r : table.rows()) {
    metric_set.insert(r.metric);
    keys.emplace(r.system, r.task);
    value[{r.system, r.task, r.metric}] = r.value;
  }
  std::vector<std::vector<std::string>> rows{{"system", "task"}};
  for (const auto& m : metric_set) rows[0].push_back(m);
  for (const auto& [system, task] : keys) {
    std::vector<std::string> row{system, task};
    for (const auto& m : metric_set) {
      auto it = value.find({system, task, m});
      if (it == value.end()) {
        row.push_back("-");
        continue;
      }
      auto scale = table.scales().find(m);
      if (scale != table.scales().end() && scale->second == "0-100") {
        row.push_back(fmt::format("{:.2f}", it->second));
      } else if (scale != table.scales().end() && scale->second == "0-1") {
        row.push_back(fmt::format("{:.4f}", it->second));
      } else {
        row.push_back(fmt::format("{}", it->second));
      }
    }
    rows.push_back(std::move(row));
  }
  return format_columns(rows);
}

nlohmann::json to_json(const WinnerMatrix& matrix) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : matrix.cells) {
    nlohmann::json cell{{"task", c.task}, {"metric", c.metric}, {"winner", c.winner}, {"best", c.best}};
    if (c.is_tie()) cell["tied"] = c.tied;
    cells.push_back(std::move(cell));
  }
  nlohmann::json missing = nlohmann::json::array();
  for (const auto& m : matrix.missing) {
    missing.push_back({{"task", m.task}, {"metric", m.metric}, {"system", m.system}});
  }
  nlohmann::json agreement = nlohmann::json::array();
  for (const auto& g : matrix.agreement) {
    agreement.push_back({{"metric_a", g.metric_a},
                         {"metric_b", g.metric_b},
                         {"compared", g.compared},
                         {"agreed", g.agreed},
                         {"fraction", g.fraction()},
                         {"disagreed_tasks", g.disagreed_tasks}});
  }
  return {{"signature", matrix.signature}, {"systems", matrix.systems},
          {"tasks", matrix.tasks},         {"metrics", matrix.metrics},
          {"cells", std::move(cells)},     {"missing", std::move(missing)},
          {"agreement", std::move(agreement)}};
}

std::string render_report(const WinnerMatrix& matrix, ReportFormat format) {
  if (format == ReportFormat::kJson) return dump(to_json(matrix));
  std::string out;
  std::vector<std::vector<std::string>> grid{{"task"}};
  for (const auto& m : matrix.metrics) grid[0].push_back(m);
  for (const auto& task : matrix.tasks) {
    std::vector<std::string> row{task};
    for (const auto& m : matrix.metrics) {
      const WinnerCell* c = matrix.cell(task, m);
      row.push_back(c ? c->winner : "-");
    }
    grid.push_back(std::move(row));
  }
  out += format_columns(grid);
  if (!matrix.missing.empty()) {
    out += "\nmissing:\n";
    for (const auto& m : matrix.missing) {
      out += fmt::format("  {} / {}: no score for {}\n", m.task, m.metric, m.system);
    }
  }
  if (!matrix.agreement.empty()) {
    std::vector<std::vector<std::string>> rows{{"metric_a", "metric_b", "agreed", "fraction", "disagreed"}};
    for (const auto& g : matrix.agreement) {
      std::string dis;
      for (const auto& t : g.disagreed_tasks) dis += (dis.empty() ? "" : ",") + t;
      rows.push_back({g.metric_a, g.metric_b, fmt::format("{}/{}", g.agreed, g.compared),
                      fmt::format("{:.4f}", g.fraction()), dis.empty() ? "-" : dis});
    }
    out += "\n" + format_columns(rows);
  }
  out += "signature: " + matrix.signature + "\n";
  return out;
}

}  // namespace mtmetrics
