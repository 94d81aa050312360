#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "mtmetrics/error.hpp"
#include "mtmetrics/evalharness.hpp"

namespace mtmetrics {

void ScoreTable::add(ScoreRow row) {
  if (!keys_.emplace(row.system, row.task, row.metric).second) {
    throw InputError(fmt::format("duplicate score for system '{}', task '{}', metric '{}'",
                                 row.system, row.task, row.metric));
  }
  rows_.push_back(std::move(row));
}

nlohmann::json ScoreTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rows_) {
    rows.push_back({{"system", r.system}, {"task", r.task}, {"metric", r.metric}, {"value", r.value}});
  }
  nlohmann::json doc{{"rows", std::move(rows)}};
  if (!scales_.empty()) doc["scales"] = scales_;
  return doc;
}

ScoreTable ScoreTable::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw InputError("score table must be an object with a \"rows\" array");
  }
  ScoreTable table;
  std::size_t index = 0;
  for (const auto& r : doc["rows"]) {
    auto field = [&](const char* key) -> const nlohmann::json& {
      if (!r.is_object() || !r.contains(key)) {
        throw InputError(fmt::format("rows[{}]: missing \"{}\"", index, key));
      }
      return r[key];
    };
    const auto& system = field("system");
    const auto& task = field("task");
    const auto& metric = field("metric");
    const auto& value = field("value");
    if (!system.is_string() || !task.is_string() || !metric.is_string() || !value.is_number()) {
      throw InputError(fmt::format("rows[{}]: system/task/metric must be strings, value a number", index));
    }
    table.add({system.get<std::string>(), task.get<std::string>(), metric.get<std::string>(),
               value.get<double>()});
    ++index;
  }
  if (doc.contains("scales")) {
    if (!doc["scales"].is_object()) throw InputError("\"scales\" must be an object");
    for (const auto& [metric, scale] : doc["scales"].items()) {
      if (!scale.is_string()) throw InputError("\"scales\" values must be strings");
      table.set_scale(metric, scale.get<std::string>());
    }
  }
  return table;
}

const WinnerCell* WinnerMatrix::cell(std::string_view task, std::string_view metric) const {
  for (const auto& c : cells) {
    if (c.task == task && c.metric == metric) return &c;
  }
  return nullptr;
}

const MetricAgreement* WinnerMatrix::agreement_between(std::string_view a,
                                                       std::string_view b) const {
  for (const auto& g : agreement) {
    if ((g.metric_a == a && g.metric_b == b) || (g.metric_a == b && g.metric_b == a)) return &g;
  }
  return nullptr;
}

WinnerMatrix winner_matrix(const ScoreTable& table, const WinnerOptions& options) {
  WinnerMatrix out;
  out.signature = options.rounding
                      ? fmt::format("winners|round:{}:{}|sigfmt:{}", options.rounding->decimals,
                                    options.rounding->mode == RoundingPolicy::Mode::kHalfUp ? "half-up" : "half-even",
                                    kSignatureFormatVersion)
                      : fmt::format("winners|round:exact|sigfmt:{}", kSignatureFormatVersion);
  std::set<std::string> systems;
  std::set<std::string> tasks;
  std::set<std::string> metrics;
  std::map<std::tuple<std::string, std::string, std::string>, double> value;
  for (const auto& r : table.rows()) {
    systems.insert(r.system);
    tasks.insert(r.task);
    metrics.insert(r.metric);
    value[{r.task, r.metric, r.system}] = options.rounding ? options.rounding->apply(r.value) : r.value;
  }
  out.systems.assign(systems.begin(), systems.end());
  out.tasks.assign(tasks.begin(), tasks.end());
  out.metrics.assign(metrics.begin(), metrics.end());

  // outcome[task][metric]: winner id, or the tie marker plus tied systems.
  std::map<std::string, std::map<std::string, std::string>> outcome;
  for (const auto& task : out.tasks) {
    for (const auto& metric : out.metrics) {
      std::vector<std::pair<std::string, double>> present;
      bool any = false;
      bool complete = true;
      for (const auto& system : out.systems) {
        auto it = value.find({task, metric, system});
        if (it == value.end()) {
          complete = false;
          continue;
        }
        any = true;
        present.emplace_back(system, it->second);
      }
      if (!any) continue;
      if (!complete) {
        for (const auto& system : out.systems) {
          if (!value.contains({task, metric, system})) out.missing.push_back({task, metric, system});
        }
        continue;
      }
      double best = present.front().second;
      for (const auto& [s, v] : present) best = std::max(best, v);
      WinnerCell cell{task, metric, {}, {}, best};
      std::vector<std::string> top;
      for (const auto& [s, v] : present) {
        if (v == best) top.push_back(s);
      }
      if (top.size() == 1) {
        cell.winner = top.front();
        outcome[task][metric] = cell.winner;
      } else {
        cell.winner = std::string(WinnerMatrix::kTie);
        cell.tied = top;
        std::string key = cell.winner;
        for (const auto& s : top) key += "|" + s;
        outcome[task][metric] = key;
      }
      out.cells.push_back(std::move(cell));
    }
  }

  for (std::size_t a = 0; a < out.metrics.size(); ++a) {
    for (std::size_t b = a + 1; b < out.metrics.size(); ++b) {
      MetricAgreement g{out.metrics[a], out.metrics[b], 0, 0, {}};
      for (const auto& task : out.tasks) {
        const auto& row = outcome[task];
        auto wa = row.find(g.metric_a);
        auto wb = row.find(g.metric_b);
        if (wa == row.end() || wb == row.end()) continue;
        ++g.compared;
        if (wa->second == wb->second) {
          ++g.agreed;
        } else {
          g.disagreed_tasks.push_back(task);
        }
      }
      out.agreement.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace mtmetrics
