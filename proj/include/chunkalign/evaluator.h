#ifndef CHUNKALIGN_EVALUATOR_H_
#define CHUNKALIGN_EVALUATOR_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "chunkalign/alignment.h"
#include "chunkalign/ratio.h"

namespace chunkalign {

struct EvalOptions {
  // A predicted group counts when it overlaps some gold group on both sides.
  bool partial_credit = false;
  // Also score deletion groups (exact kind and index match). Off by default:
  // precision is over aligned sentence groups.
  bool count_deletions = false;
};

struct TextReport {
  std::string text_id;
  std::size_t predicted = 0;
  std::size_t correct = 0;
  std::size_t gold = 0;

  // correct / predicted; 1 when nothing was predicted.
  double precision() const;
  double error_percent() const { return 100.0 * (1.0 - precision()); }
  // correct / gold; reported in addition to precision.
  double recall() const;
};

struct AggregateReport {
  std::size_t texts = 0;
  std::size_t predicted = 0;
  std::size_t correct = 0;
  std::size_t gold = 0;

  double precision() const;
  double recall() const;
};

// Micro-averaged precision: pooled correct over pooled predicted.
double micro_precision(std::size_t correct, std::size_t predicted);

// Throws Error(kInvalidArgument) if `pred` refers to sentences outside the
// gold text sizes.
TextReport score_alignment(const Alignment& pred, const Alignment& gold, const EvalOptions& options,
                           std::string text_id = {});

AggregateReport aggregate(const std::vector<TextReport>& reports);

struct HistogramRow {
  Ratio low;
  Ratio high;
  std::size_t texts = 0;
};

// Buckets [k*w, (k+1)*w) over error percentage, the last one closed at 100.
// Bucket membership is computed exactly from the integer counts.
std::vector<HistogramRow> error_histogram(const std::vector<TextReport>& reports, const Ratio& bucket_width);
std::string histogram_csv(const std::vector<HistogramRow>& rows);

struct CompareRow {
  std::string text_id;
  double precision_a = 0.0;
  double precision_b = 0.0;
};

// Rows sorted by ascending precision_b, then text id. Both sets must cover
// the same text ids.
std::vector<CompareRow> compare_aligners(const std::vector<TextReport>& a, const std::vector<TextReport>& b);
std::string compare_csv(const std::vector<CompareRow>& rows);

// `src_index,tgt_index` step-chart rows; many-sided groups are reduced to the
// mean index on that side, deletions leave the other field empty.
std::string export_path_csv(const Alignment& alignment);

std::string report_csv(const std::vector<TextReport>& reports);
std::vector<TextReport> parse_report_csv(std::string_view content);
std::vector<TextReport> load_report_csv(const std::filesystem::path& path);

std::string summary_line(const AggregateReport& report);

// Renders a decimal without trailing zeros ("2.5", "10").
std::string format_number(double value);
std::string format_ratio(const Ratio& value);

}  // namespace chunkalign

#endif  // CHUNKALIGN_EVALUATOR_H_
