#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mtmetrics/error.hpp"
#include "mtmetrics/evalharness.hpp"
#include "oracles.hpp"
#include "temp_files.hpp"

using namespace mtmetrics;

namespace {

const std::vector<Metric> kAll{Metric::kBleu, Metric::kHlepor, Metric::kRougeL, Metric::kMeteor};

}  // namespace

TEST(ReadLines, HandlesCrLfAndTrailingNewline) {
  TempDir dir;
  EXPECT_EQ(read_lines(dir.write("a.txt", "one\r\ntwo\n")), (std::vector<std::string>{"one", "two"}));
  EXPECT_EQ(read_lines(dir.write("b.txt", "one\n\nthree")),
            (std::vector<std::string>{"one", "", "three"}));
  EXPECT_TRUE(read_lines(dir.write("c.txt", "")).empty());
  EXPECT_THROW(read_lines(dir.path() / "missing.txt"), InputError);
}

TEST(ReadLines, ReportsInvalidUtf8WithLineNumber) {
  TempDir dir;
  try {
    read_lines(dir.write("bad.txt", "fine\nbro\xffken\n"));
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ReadParallel, MismatchNamesBothCounts) {
  TempDir dir;
  const auto h = dir.write("h.txt", "a\nb\nc\n");
  const auto r = dir.write("r.txt", "a\nb\n");
  try {
    read_parallel(h, r);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("3 lines"), std::string::npos);
    EXPECT_NE(msg.find("2 lines"), std::string::npos);
  }
}

TEST(ReadTsv, SplitsAtFirstTab) {
  TempDir dir;
  const auto t = read_tsv(dir.write("p.tsv", "a b\tc\td\nx\ty\n"));
  EXPECT_EQ(t.hyps, (std::vector<std::string>{"a b", "x"}));
  EXPECT_EQ(t.refs, (std::vector<std::string>{"c\td", "y"}));
  EXPECT_THROW(read_tsv(dir.write("q.tsv", "no tab\n")), InputError);
}

TEST(Metrics, ParseList) {
  EXPECT_EQ(parse_metric_list("bleu,hlepor,bleu"), (std::vector<Metric>{Metric::kBleu, Metric::kHlepor}));
  EXPECT_THROW(parse_metric_list("bleu,chrf"), InputError);
  for (auto m : kAll) EXPECT_EQ(parse_metric(metric_id(m)), m);
}

TEST(Evaluate, IdentityCorpus) {
  const std::vector<std::string> text{"The quick brown fox jumps .", "Over the lazy dog today"};
  const auto r = evaluate_corpus(text, text, kAll, EvalConfig{});
  EXPECT_DOUBLE_EQ(r.metrics.at("bleu").corpus, 100.0);
  EXPECT_DOUBLE_EQ(r.metrics.at("hlepor").corpus, 100.0);
  EXPECT_DOUBLE_EQ(r.metrics.at("rouge-l").corpus, 1.0);
  EXPECT_NEAR(r.metrics.at("meteor").corpus, ((1.0 - 0.5 / 216.0) + (1.0 - 0.5 / 125.0)) / 2.0, 1e-12);
  EXPECT_EQ(r.segments, 2u);
  EXPECT_EQ(r.hyp_tokens, 11);
}

TEST(Evaluate, BlankLinePairsCountAsMatches) {
  const std::vector<std::string> hyps{"a b", ""};
  const std::vector<std::string> refs{"a b", ""};
  const std::vector<Metric> m{Metric::kHlepor};
  EXPECT_DOUBLE_EQ(evaluate_corpus(hyps, refs, m, EvalConfig{}).metrics.at("hlepor").corpus, 100.0);
}

TEST(Evaluate, HleporMatchesSentenceMean) {
  const std::vector<std::string> hyps{"the cat sat", "a b c"};
  const std::vector<std::string> refs{"the cat sat down", "x y z"};
  const std::vector<Metric> m{Metric::kHlepor};
  const auto r = evaluate_corpus(hyps, refs, m, EvalConfig{});
  EXPECT_NEAR(r.metrics.at("hlepor").corpus, 100.0 * 0.76213845890882814 / 2.0, 1e-12);
  ASSERT_TRUE(r.metrics.at("hlepor").segments.has_value());
  EXPECT_EQ(r.metrics.at("hlepor").segments->size(), 2u);
}

TEST(Evaluate, SegmentBleuIsOptIn) {
  const std::vector<std::string> t{"a b c d", "e f g h"};
  const std::vector<Metric> m{Metric::kBleu};
  EXPECT_FALSE(evaluate_corpus(t, t, m, EvalConfig{}).metrics.at("bleu").segments.has_value());
  EvalConfig cfg;
  cfg.segment_bleu = true;
  const auto r = evaluate_corpus(t, t, m, cfg);
  ASSERT_TRUE(r.metrics.at("bleu").segments.has_value());
  EXPECT_DOUBLE_EQ((*r.metrics.at("bleu").segments)[1], 100.0);
}

TEST(Evaluate, RejectsBadInput) {
  const std::vector<std::string> one{"a"}, two{"a", "b"}, none{};
  EXPECT_THROW(evaluate_corpus(one, two, kAll, EvalConfig{}), InputError);
  EXPECT_THROW(evaluate_corpus(none, none, kAll, EvalConfig{}), InputError);
  EXPECT_THROW(evaluate_corpus(one, one, std::vector<Metric>{}, EvalConfig{}), InputError);
}

TEST(Signatures, RecordEverySetting) {
  EvalConfig cfg;
  EXPECT_EQ(metric_signature(Metric::kHlepor, cfg),
            "hLEPOR|case:lc|tok:13a|params:9,1,2,2,1,3|agg:mean|refs:1");
  EXPECT_EQ(metric_signature(Metric::kRougeL, cfg), "ROUGE-L|case:lc|tok:13a|f:1|refs:1");
  EXPECT_EQ(metric_signature(Metric::kMeteor, cfg), "METEOR-exact|case:lc|tok:13a|params:0.9,3,0.5|refs:1");
  cfg.bleu_smoothing = Smoothing::add_k(0.5);
  EXPECT_EQ(metric_signature(Metric::kBleu, cfg), "BLEU|case:lc|tok:13a|smooth:add-k|n:4|refs:1|k:0.5");
  const std::vector<Metric> two{Metric::kBleu, Metric::kRougeL};
  EXPECT_EQ(run_signature(two, EvalConfig{}),
            "BLEU|case:lc|tok:13a|smooth:none|n:4|refs:1 + ROUGE-L|case:lc|tok:13a|f:1|refs:1");
}

TEST(Evaluate, JsonIndependentOfThreadCount) {
  std::mt19937_64 rng(3);
  std::vector<std::string> hyps, refs;
  for (int i = 0; i < 200; ++i) {
    hyps.push_back(oracle::join(oracle::random_tokens(rng, 20, 30, 1)));
    refs.push_back(oracle::join(oracle::random_tokens(rng, 20, 30, 1)));
  }
  EvalConfig seq;
  seq.segment_bleu = true;
  EvalConfig par = seq;
  par.threads = 7;
  const auto a = render_report(evaluate_corpus(hyps, refs, kAll, seq), ReportFormat::kJson, true);
  const auto b = render_report(evaluate_corpus(hyps, refs, kAll, par), ReportFormat::kJson, true);
  EXPECT_EQ(a, b);
}

TEST(Rounding, HalfUpAwayFromZero) {
  RoundingPolicy p;
  EXPECT_DOUBLE_EQ(p.apply(26.005), 26.01);
  EXPECT_DOUBLE_EQ(p.apply(-26.005), -26.01);
  EXPECT_DOUBLE_EQ(p.apply(1.234), 1.23);
  EXPECT_DOUBLE_EQ(p.apply(-0.001), 0.0);
  p.mode = RoundingPolicy::Mode::kHalfEven;
  EXPECT_DOUBLE_EQ(p.apply(0.125), 0.12);
  EXPECT_DOUBLE_EQ(p.apply(0.135), 0.14);
}

TEST(ImprovementRate, PublishedPairs) {
  for (const auto& c : fixtures::kRates) {
    EXPECT_DOUBLE_EQ(improvement_rate(c.before, c.after), c.rate) << c.before << " -> " << c.after;
  }
  EXPECT_THROW(improvement_rate(0.0, 5.0), InputError);
  EXPECT_THROW(improvement_rate(-1.0, 5.0), InputError);
}

TEST(Compare, RatesPerMetric) {
  const std::vector<std::string> refs{"a b c d e f", "g h i j k l"};
  const std::vector<std::string> before{"a b x d y f", "g z i q k l"};
  const std::vector<Metric> m{Metric::kHlepor, Metric::kRougeL, Metric::kBleu};
  const auto r0 = evaluate_corpus(before, refs, m, EvalConfig{});
  const auto r1 = evaluate_corpus(refs, refs, m, EvalConfig{});
  const auto report = compare(r0, r1);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].metric_id, "hlepor");
  EXPECT_DOUBLE_EQ(*report.rows[0].rate_percent,
                   improvement_rate(r0.metrics.at("hlepor").corpus, 100.0));
  // Unsmoothed BLEU of the baseline is 0, so no rate is defined.
  EXPECT_DOUBLE_EQ(report.rows[2].before, 0.0);
  EXPECT_FALSE(report.rows[2].rate_percent.has_value());
  const auto json = to_json(report);
  EXPECT_TRUE(json["rows"][2]["rate_percent"].is_null());
}

TEST(WinnerMatrix, ClinicalFixture) {
  const auto wm = winner_matrix(fixtures::clinical_scores());
  EXPECT_EQ(wm.systems, (std::vector<std::string>{fixtures::kMarian, fixtures::kNllb}));
  EXPECT_EQ(wm.cells.size(), 15u);
  EXPECT_TRUE(wm.missing.empty());
  for (const auto& c : wm.cells) {
    if (c.task == "task1") EXPECT_EQ(c.winner, fixtures::kMarian) << c.metric;
  }
  EXPECT_EQ(wm.cell("task2", "SacreBLEU")->winner, fixtures::kNllb);
  EXPECT_EQ(wm.cell("task2", "COMET")->winner, fixtures::kNllb);
  EXPECT_EQ(wm.cell("task2", "BLEU-HF")->winner, fixtures::kNllb);
  EXPECT_EQ(wm.cell("task2", "METEOR")->winner, fixtures::kMarian);
  EXPECT_EQ(wm.cell("task2", "ROUGE-L")->winner, fixtures::kMarian);
  EXPECT_EQ(wm.cell("task3", "SacreBLEU")->winner, fixtures::kNllb);
  EXPECT_EQ(wm.cell("task3", "BLEU-HF")->winner, fixtures::kNllb);
  EXPECT_EQ(wm.cell("task3", "METEOR")->winner, fixtures::kMarian);
  EXPECT_EQ(wm.cell("task3", "COMET")->winner, fixtures::kMarian);
  EXPECT_EQ(wm.cell("task3", "ROUGE-L")->winner, fixtures::kMarian);

  const auto* g = wm.agreement_between("SacreBLEU", "METEOR");
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(g->compared, 3u);
  EXPECT_EQ(g->agreed, 1u);
  EXPECT_EQ(g->disagreed_tasks, (std::vector<std::string>{"task2", "task3"}));
  EXPECT_DOUBLE_EQ(wm.agreement_between("SacreBLEU", "BLEU-HF")->fraction(), 1.0);
  EXPECT_EQ(wm.agreement.size(), 10u);
}

TEST(WinnerMatrix, TiesAndMissingCells) {
  ScoreTable t;
  t.add({"A", "t1", "m", 0.5});
  t.add({"B", "t1", "m", 0.5});
  t.add({"A", "t2", "m", 0.7});
  const auto wm = winner_matrix(t);
  ASSERT_EQ(wm.cells.size(), 1u);
  EXPECT_EQ(wm.cells[0].winner, WinnerMatrix::kTie);
  EXPECT_EQ(wm.cells[0].tied, (std::vector<std::string>{"A", "B"}));
  ASSERT_EQ(wm.missing.size(), 1u);
  EXPECT_EQ(wm.missing[0].system, "B");
  EXPECT_EQ(wm.missing[0].task, "t2");
}

TEST(WinnerMatrix, RoundingCanCreateTies) {
  ScoreTable t;
  t.add({"A", "t", "m", 0.12341});
  t.add({"B", "t", "m", 0.12339});
  EXPECT_EQ(winner_matrix(t).cells[0].winner, "A");
  WinnerOptions opt;
  opt.rounding = RoundingPolicy{3};
  const auto wm = winner_matrix(t, opt);
  EXPECT_TRUE(wm.cells[0].is_tie());
  EXPECT_EQ(wm.signature, "winners|round:3:half-up|sigfmt:1");
  EXPECT_EQ(winner_matrix(t).signature, "winners|round:exact|sigfmt:1");
}

TEST(WinnerMatrix, InvariantUnderPositiveRescaling) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> val(0.0, 1.0), scale(0.01, 100.0);
  for (int trial = 0; trial < 200; ++trial) {
    ScoreTable a, b;
    const double s = scale(rng);
    for (const char* sys : {"s1", "s2", "s3"}) {
      for (const char* task : {"t1", "t2"}) {
        const double v = std::round(val(rng) * 8) / 8;  // frequent ties
        a.add({sys, task, "m", v});
        b.add({sys, task, "m", v * s});
      }
    }
    const auto wa = winner_matrix(a), wb = winner_matrix(b);
    ASSERT_EQ(wa.cells.size(), wb.cells.size());
    for (std::size_t i = 0; i < wa.cells.size(); ++i) {
      ASSERT_EQ(wa.cells[i].winner, wb.cells[i].winner);
      ASSERT_EQ(wa.cells[i].tied, wb.cells[i].tied);
    }
  }
}

TEST(ScoreTable, JsonRoundTripAndValidation) {
  const auto t = fixtures::clinical_scores();
  const auto back = ScoreTable::from_json(t.to_json());
  EXPECT_EQ(back.rows().size(), t.rows().size());
  EXPECT_EQ(back.scales(), t.scales());
  EXPECT_EQ(render_report(back, ReportFormat::kJson), render_report(t, ReportFormat::kJson));

  EXPECT_THROW(ScoreTable::from_json(nlohmann::json::array()), InputError);
  EXPECT_THROW(ScoreTable::from_json(nlohmann::json::parse(R"({"rows":[{"system":"a"}]})")), InputError);
  EXPECT_THROW(ScoreTable::from_json(nlohmann::json::parse(
                   R"({"rows":[{"system":"a","task":"t","metric":"m","value":"high"}]})")),
               InputError);
  ScoreTable dup;
  dup.add({"a", "t", "m", 1.0});
  EXPECT_THROW(dup.add({"a", "t", "m", 2.0}), InputError);
}

TEST(Render, BleuTableLayout) {
  const std::vector<std::string> h{"the cat sat on the mat"}, r{"the cat sat on a mat"};
  const auto text = render_report(bleu_corpus(h, r, BleuConfig{}), ReportFormat::kTable);
  EXPECT_EQ(text,
            "uni-gram  bi-gram  tri-gram  4-gram    BP  Overall\n"
            "   83.33    60.00     50.00   33.33  1.00    53.73\n"
            "signature: BLEU|case:lc|tok:13a|smooth:none|n:4|refs:1\n");
}

TEST(Render, WinnerTableShowsAgreement) {
  const auto text = render_report(winner_matrix(fixtures::clinical_scores()), ReportFormat::kTable);
  EXPECT_NE(text.find("SacreBLEU"), std::string::npos);
  EXPECT_NE(text.find("task2,task3"), std::string::npos);
  EXPECT_NE(text.find("signature: winners|round:exact|sigfmt:1"), std::string::npos);
}

TEST(Render, FormatNames) {
  EXPECT_EQ(parse_format("json"), ReportFormat::kJson);
  EXPECT_EQ(parse_format("table"), ReportFormat::kTable);
  EXPECT_THROW(parse_format("csv"), InputError);
}
