#pragma once

// Published scores reused as fixtures for rates and winner analysis.

#include <array>

#include "mtmetrics/evalharness.hpp"

namespace fixtures {

struct RateCase {
  double before;
  double after;
  double rate;
};

inline constexpr std::array<RateCase, 7> kRates{{
    {7.38, 18.46, 150.14},
    {13.93, 24.49, 75.81},
    {36.91, 48.78, 32.16},
    {47.55, 59.92, 26.01},
    {40.05, 44.75, 11.74},
    {37.23, 40.84, 9.70},
    {37.23, 31.88, -14.37},
}};

inline constexpr const char* kMarian = "clinic-Marian";
inline constexpr const char* kNllb = "clinic-NLLB";

// Three clinical tasks, five metrics, two systems.
inline mtmetrics::ScoreTable clinical_scores() {
  struct Entry {
    const char* task;
    const char* metric;
    double marian;
    double nllb;
  };
  static constexpr Entry kEntries[] = {
      {"task1", "SacreBLEU", 38.18, 37.74}, {"task1", "METEOR", 0.6338, 0.6273},
      {"task1", "COMET", 0.4237, 0.4081},   {"task1", "BLEU-HF", 0.3650, 0.3601},
      {"task1", "ROUGE-L", 0.6271, 0.6193}, {"task2", "SacreBLEU", 26.87, 28.57},
      {"task2", "METEOR", 0.5885, 0.5873},  {"task2", "COMET", 0.9791, 1.0290},
      {"task2", "BLEU-HF", 0.2667, 0.2844}, {"task2", "ROUGE-L", 0.6720, 0.6710},
      {"task3", "SacreBLEU", 39.10, 41.63}, {"task3", "METEOR", 0.6262, 0.6072},
      {"task3", "COMET", 0.9495, 0.9180},   {"task3", "BLEU-HF", 0.3675, 0.3932},
      {"task3", "ROUGE-L", 0.7688, 0.7477},
  };
  mtmetrics::ScoreTable table;
  for (const auto& e : kEntries) {
    table.add({kMarian, e.task, e.metric, e.marian});
    table.add({kNllb, e.task, e.metric, e.nllb});
  }
  table.set_scale("SacreBLEU", "0-100");
  return table;
}

}  // namespace fixtures
