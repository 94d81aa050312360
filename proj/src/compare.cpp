#include <fmt/format.h>

#include <cmath>

#include "mtmetrics/error.hpp"
#include "mtmetrics/evalharness.hpp"

namespace mtmetrics {

double RoundingPolicy::apply(double value) const {
  const double scale = std::pow(10.0, decimals);
  const double magnitude = std::fabs(value * scale);
  // Absorb representation error so that e.g. 26.005 stored as 26.00499...
  // still rounds as the decimal it stands for.
  const double slack = 1e-9 * std::max(1.0, magnitude);
  double rounded;
  if (mode == Mode::kHalfUp) {
    rounded = std::floor(magnitude + 0.5 + slack);
  } else {
    const double floor = std::floor(magnitude);
    const double frac = magnitude - floor;
    if (std::fabs(frac - 0.5) <= slack) {
      rounded = std::fmod(floor, 2.0) == 0.0 ? floor : floor + 1.0;
    } else {
      rounded = std::floor(magnitude + 0.5);
    }
  }
  if (rounded == 0.0) return 0.0;
  return std::copysign(rounded, value) / scale;
}

double improvement_rate(double before, double after, const RoundingPolicy& rounding) {
  if (!(before > 0.0)) {
    throw InputError(fmt::format("improvement rate needs a positive baseline, got {}", before));
  }
  return rounding.apply(100.0 * (after - before) / before);
}

ComparisonReport compare(const EvaluationResult& before, const EvaluationResult& after,
                         const RoundingPolicy& rounding) {
  ComparisonReport report;
  report.signature = after.signature;
  for (Metric m : after.order) {
    const std::string id(metric_id(m));
    auto b = before.metrics.find(id);
    auto a = after.metrics.find(id);
    if (b == before.metrics.end() || a == after.metrics.end()) continue;
    ComparisonRow row{id, b->second.corpus, a->second.corpus, std::nullopt};
    if (row.before > 0.0) row.rate_percent = improvement_rate(row.before, row.after, rounding);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace mtmetrics
