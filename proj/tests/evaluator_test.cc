#include <gtest/gtest.h>

#include "chunkalign/error.h"
#include "chunkalign/evaluator.h"

namespace chunkalign {
namespace {

Alignment make(std::size_t n, std::size_t m, std::vector<AlignedGroup> groups) {
  Alignment a;
  a.source_count = n;
  a.target_count = m;
  a.groups = std::move(groups);
  a.complete();
  return a;
}

TEST(Evaluator, WorkedExampleAsGold) {
  const Alignment gold = make(4, 2, {{{2}, {0}, 1}, {{3}, {1}, 1}});
  const TextReport r = score_alignment(gold, gold, EvalOptions{});
  EXPECT_EQ(r.predicted, 2u);
  EXPECT_EQ(r.correct, 2u);
  EXPECT_DOUBLE_EQ(r.precision(), 1.0);
  EXPECT_DOUBLE_EQ(r.error_percent(), 0.0);
}

TEST(Evaluator, StrictVersusPartialCredit) {
  const Alignment gold = make(3, 2, {{{0, 1}, {0}, 1}, {{2}, {1}, 1}});
  const Alignment pred = make(3, 2, {{{1}, {0}, 1}, {{2}, {1}, 1}});
  const TextReport strict = score_alignment(pred, gold, EvalOptions{});
  EXPECT_EQ(strict.correct, 1u);
  EvalOptions partial;
  partial.partial_credit = true;
  EXPECT_EQ(score_alignment(pred, gold, partial).correct, 2u);
}

TEST(Evaluator, DeletionsExcludedUnlessRequested) {
  const Alignment gold = make(3, 2, {{{0}, {0}, 1}, {{2}, {1}, 1}});
  const Alignment pred = make(3, 2, {{{0}, {0}, 1}, {{1}, {1}, 1}});
  const TextReport plain = score_alignment(pred, gold, EvalOptions{});
  EXPECT_EQ(plain.predicted, 2u);
  EXPECT_EQ(plain.correct, 1u);
  EXPECT_EQ(plain.gold, 2u);
  EvalOptions with;
  with.count_deletions = true;
  const TextReport counted = score_alignment(pred, gold, with);
  // pred deletes s2, gold deletes s1: neither deletion is right.
  EXPECT_EQ(counted.predicted, 3u);
  EXPECT_EQ(counted.correct, 1u);
  EXPECT_EQ(counted.gold, 3u);
}

TEST(Evaluator, OutOfRangePrediction) {
  const Alignment gold = make(2, 2, {{{0}, {0}, 1}, {{1}, {1}, 1}});
  Alignment pred = make(3, 2, {{{2}, {1}, 1}});
  EXPECT_THROW(score_alignment(pred, gold, EvalOptions{}), Error);
}

TEST(Evaluator, MicroAverage) {
  const std::vector<TextReport> reports = {{"a", 10, 9, 10}, {"b", 30, 21, 30}, {"c", 0, 0, 2}};
  const AggregateReport agg = aggregate(reports);
  EXPECT_EQ(agg.predicted, 40u);
  EXPECT_EQ(agg.correct, 30u);
  EXPECT_EQ(format_fixed4(agg.precision()), "0.7500");
  EXPECT_EQ(format_fixed4(micro_precision(2849, 3021)), "0.9431");
  EXPECT_DOUBLE_EQ(micro_precision(0, 0), 1.0);
}

TEST(Histogram, ExactBuckets) {
  // error 0%, 10% (boundary goes up), 9.99%, 100%.
  const std::vector<TextReport> reports = {
      {"a", 10, 10, 10}, {"b", 10, 9, 10}, {"c", 10000, 9001, 10000}, {"d", 4, 0, 4}};
  const std::vector<HistogramRow> rows = error_histogram(reports, Ratio{10, 1});
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0].texts, 2u);
  EXPECT_EQ(rows[1].texts, 1u);
  EXPECT_EQ(rows[9].texts, 1u);
  EXPECT_EQ(histogram_csv(rows).substr(0, 52), "bucket_low,bucket_high,text_count\n0,10,2\n10,20,1\n20,");
}

TEST(Histogram, FractionalWidthAndErrors) {
  const std::vector<TextReport> perfect = {{"a", 5, 5, 5}};
  const std::vector<HistogramRow> rows = error_histogram(perfect, Ratio{5, 2});
  ASSERT_EQ(rows.size(), 40u);
  EXPECT_EQ(rows[0].texts, 1u);
  EXPECT_EQ(format_ratio(rows[0].high), "2.5");
  EXPECT_THROW(error_histogram({}, Ratio{10, 1}), Error);
}

TEST(Compare, SortedBySecondPrecision) {
  const std::vector<TextReport> a = {{"x", 7, 7, 7}, {"y", 10, 10, 10}, {"z", 4, 3, 4}};
  const std::vector<TextReport> b = {{"x", 7, 4, 7}, {"y", 10, 9, 10}, {"z", 4, 4, 4}};
  const std::vector<CompareRow> rows = compare_aligners(a, b);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].text_id, "x");
  EXPECT_EQ(compare_csv(rows),
            "text_id,precision_a,precision_b\nx,1.0000,0.5714\ny,1.0000,0.9000\nz,0.7500,1.0000\n");
  EXPECT_THROW(compare_aligners(a, {{"q", 1, 1, 1}}), Error);
}

TEST(Compare, IdenticalReportsGiveEqualColumns) {
  const std::vector<TextReport> a = {{"x", 7, 5, 7}};
  const std::vector<CompareRow> rows = compare_aligners(a, a);
  EXPECT_EQ(rows[0].precision_a, rows[0].precision_b);
}

TEST(ExportPath, DiagonalAndGroups) {
  const Alignment diag = make(3, 3, {{{0}, {0}, 1}, {{1}, {1}, 1}, {{2}, {2}, 1}});
  EXPECT_EQ(export_path_csv(diag), "src_index,tgt_index\n0,0\n1,1\n2,2\n");
  const Alignment mixed = make(3, 2, {{{0, 1}, {0}, 1}});
  EXPECT_EQ(export_path_csv(mixed), "src_index,tgt_index\n0.5,0\n2,\n,1\n");
}

TEST(ReportCsv, RoundTrip) {
  const std::vector<TextReport> reports = {{"t000", 21, 20, 22}, {"t001", 0, 0, 3}};
  const std::string csv = report_csv(reports);
  const std::vector<TextReport> back = parse_report_csv(csv);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].text_id, "t000");
  EXPECT_EQ(back[0].correct, 20u);
  EXPECT_EQ(back[1].gold, 3u);
  EXPECT_THROW(parse_report_csv("text_id,predicted\nx,3\n"), Error);
  EXPECT_THROW(parse_report_csv("x,3,4,5\n"), Error);
}

TEST(Summary, Line) {
  AggregateReport agg;
  agg.texts = 140;
  agg.predicted = 3021;
  agg.correct = 2849;
  agg.gold = 3021;
  EXPECT_EQ(summary_line(agg), "precision=0.9431 recall=0.9431 correct=2849 predicted=3021 gold=3021 texts=140");
}

}  // namespace
}  // namespace chunkalign
