#include "chunkalign/evaluator.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "chunkalign/corpus.h"
#include "chunkalign/error.h"

namespace chunkalign {

namespace {

bool intersects(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool scored(const AlignedGroup& g, const EvalOptions& options) { return options.count_deletions || !g.is_deletion(); }

std::string mean_index(const std::vector<std::size_t>& indices) {
  if (indices.empty()) return {};
  double sum = 0.0;
  for (std::size_t i : indices) sum += static_cast<double>(i);
  return format_number(sum / static_cast<double>(indices.size()));
}

}  // namespace

double micro_precision(std::size_t correct, std::size_t predicted) {
  return predicted == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(predicted);
}

double TextReport::precision() const { return micro_precision(correct, predicted); }

double TextReport::recall() const {
  return gold == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(gold);
}

double AggregateReport::precision() const { return micro_precision(correct, predicted); }

double AggregateReport::recall() const {
  return gold == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(gold);
}

TextReport score_alignment(const Alignment& pred, const Alignment& gold, const EvalOptions& options,
                           std::string text_id) {
  for (const AlignedGroup& g : pred.groups) {
    for (std::size_t s : g.src) {
      if (s >= gold.source_count) {
        throw Error(ErrorCode::kInvalidArgument, "source index " + std::to_string(s) + " out of range");
      }
    }
    for (std::size_t t : g.tgt) {
      if (t >= gold.target_count) {
        throw Error(ErrorCode::kInvalidArgument, "target index " + std::to_string(t) + " out of range");
      }
    }
  }
  TextReport report;
  report.text_id = std::move(text_id);
  for (const AlignedGroup& g : gold.groups) {
    if (scored(g, options)) ++report.gold;
  }
  for (const AlignedGroup& p : pred.groups) {
    if (!scored(p, options)) continue;
    ++report.predicted;
    const bool hit = std::any_of(gold.groups.begin(), gold.groups.end(), [&](const AlignedGroup& g) {
      if (p.is_deletion() || g.is_deletion() || !options.partial_credit) return p == g;
      return intersects(p.src, g.src) && intersects(p.tgt, g.tgt);
    });
    if (hit) ++report.correct;
  }
  return report;
}

AggregateReport aggregate(const std::vector<TextReport>& reports) {
  AggregateReport out;
  for (const TextReport& r : reports) {
    ++out.texts;
    out.predicted += r.predicted;
    out.correct += r.correct;
    out.gold += r.gold;
  }
  return out;
}

std::vector<HistogramRow> error_histogram(const std::vector<TextReport>& reports, const Ratio& bucket_width) {
  if (reports.empty()) throw Error(ErrorCode::kInvalidArgument, "no reports");
  if (bucket_width.num == 0 || bucket_width.den == 0) {
    throw Error(ErrorCode::kInvalidArgument, "bucket width must be positive");
  }
  const std::uint64_t wn = bucket_width.num;
  const std::uint64_t wd = bucket_width.den;
  // ceil(100 / w)
  const std::uint64_t buckets = std::max<std::uint64_t>(1, (100 * wd + wn - 1) / wn);
  std::vector<HistogramRow> rows(buckets);
  for (std::uint64_t k = 0; k < buckets; ++k) {
    rows[k].low = Ratio{k * wn, wd};
    const Ratio high{(k + 1) * wn, wd};
    rows[k].high = high < Ratio{100, 1} ? high : Ratio{100, 1};
  }
  for (const TextReport& r : reports) {
    std::uint64_t k = 0;
    if (r.predicted > 0) {
      // floor(error% / w) with error% = 100 * wrong / predicted.
      const unsigned __int128 wrong = r.predicted - r.correct;
      k = static_cast<std::uint64_t>((wrong * 100 * wd) / (static_cast<unsigned __int128>(r.predicted) * wn));
    }
    rows[std::min(k, buckets - 1)].texts++;
  }
  return rows;
}

std::string histogram_csv(const std::vector<HistogramRow>& rows) {
  std::string out = "bucket_low,bucket_high,text_count\n";
  for (const HistogramRow& r : rows) {
    out += format_ratio(r.low) + "," + format_ratio(r.high) + "," + std::to_string(r.texts) + "\n";
  }
  return out;
}

std::vector<CompareRow> compare_aligners(const std::vector<TextReport>& a, const std::vector<TextReport>& b) {
  std::map<std::string, double> b_precision;
  for (const TextReport& r : b) b_precision[r.text_id] = r.precision();
  if (b_precision.size() != a.size()) throw Error(ErrorCode::kInvalidArgument, "report sets cover different texts");
  std::vector<CompareRow> rows;
  for (const TextReport& r : a) {
    const auto it = b_precision.find(r.text_id);
    if (it == b_precision.end()) {
      throw Error(ErrorCode::kInvalidArgument, "text '" + r.text_id + "' missing from the second report set");
    }
    rows.push_back(CompareRow{r.text_id, r.precision(), it->second});
  }
  std::sort(rows.begin(), rows.end(), [](const CompareRow& x, const CompareRow& y) {
    if (x.precision_b != y.precision_b) return x.precision_b < y.precision_b;
    return x.text_id < y.text_id;
  });
  return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
  std::string out = "text_id,precision_a,precision_b\n";
  for (const CompareRow& r : rows) {
    out += r.text_id + "," + format_fixed4(r.precision_a) + "," + format_fixed4(r.precision_b) + "\n";
  }
  return out;
}

std::string export_path_csv(const Alignment& alignment) {
  std::string out = "src_index,tgt_index\n";
  for (const AlignedGroup& g : alignment.groups) {
    out += mean_index(g.src) + "," + mean_index(g.tgt) + "\n";
  }
  return out;
}

std::string report_csv(const std::vector<TextReport>& reports) {
  std::string out = "text_id,predicted,correct,gold,precision,error_pct,recall\n";
  for (const TextReport& r : reports) {
    out += r.text_id + "," + std::to_string(r.predicted) + "," + std::to_string(r.correct) + "," +
           std::to_string(r.gold) + "," + format_fixed4(r.precision()) + "," + format_fixed4(r.error_percent()) +
           "," + format_fixed4(r.recall()) + "\n";
  }
  return out;
}

std::vector<TextReport> parse_report_csv(std::string_view content) {
  std::vector<TextReport> out;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (line_number == 1 && line.starts_with("text_id,"))) continue;
    std::vector<std::string> fields;
    std::stringstream fs(line);
    std::string field;
    while (std::getline(fs, field, ',')) fields.push_back(field);
    if (fields.size() < 4) throw Error(ErrorCode::kFormat, "report: expected text_id,predicted,correct,gold", line_number);
    TextReport r;
    r.text_id = fields[0];
    std::size_t* targets[] = {&r.predicted, &r.correct, &r.gold};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string& f = fields[k + 1];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), *targets[k]);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
        throw Error(ErrorCode::kFormat, "report: bad count '" + f + "'", line_number);
      }
    }
    if (r.correct > r.predicted) throw Error(ErrorCode::kFormat, "report: correct exceeds predicted", line_number);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TextReport> load_report_csv(const std::filesystem::path& path) {
  try {
    return parse_report_csv(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string summary_line(const AggregateReport& report) {
  return "precision=" + format_fixed4(report.precision()) + " recall=" + format_fixed4(report.recall()) +
         " correct=" + std::to_string(report.correct) + " predicted=" + std::to_string(report.predicted) +
         " gold=" + std::to_string(report.gold) + " texts=" + std::to_string(report.texts);
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return ec == std::errc() ? std::string(buf, ptr) : std::to_string(value);
}

std::string format_ratio(const Ratio& value) {
  if (value.den != 0 && value.num % value.den == 0) return std::to_string(value.num / value.den);
  return format_number(value.value());
}

}  // namespace chunkalign
