#include "chunkalign/baseline_gc.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "chunkalign/error.h"

namespace chunkalign {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t range_sum(std::span<const std::size_t> lengths, std::size_t begin, std::size_t count) {
  std::size_t sum = 0;
  for (std::size_t k = begin; k < begin + count; ++k) sum += lengths[k];
  return sum;
}

std::vector<std::size_t> sentence_lengths(const Text& text) {
  std::vector<std::size_t> out;
  out.reserve(text.sentences.size());
  for (const Sentence& s : text.sentences) out.push_back(s.char_length);
  return out;
}

}  // namespace

GcMoveShape move_shape(GcMove move) {
  switch (move) {
    case GcMove::kOneOne: return {1, 1};
    case GcMove::kOneZero: return {1, 0};
    case GcMove::kZeroOne: return {0, 1};
    case GcMove::kTwoOne: return {2, 1};
    case GcMove::kOneTwo: return {1, 2};
    case GcMove::kTwoTwo: return {2, 2};
  }
  return {1, 1};
}

const char* move_name(GcMove move) {
  switch (move) {
    case GcMove::kOneOne: return "1-1";
    case GcMove::kOneZero: return "1-0";
    case GcMove::kZeroOne: return "0-1";
    case GcMove::kTwoOne: return "2-1";
    case GcMove::kOneTwo: return "1-2";
    case GcMove::kTwoTwo: return "2-2";
  }
  return "?";
}

void LengthModelParams::validate() const {
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    throw Error(ErrorCode::kInvalidArgument, "variance must be positive");
  }
  if (!(mean_ratio > 0.0) || !std::isfinite(mean_ratio)) {
    throw Error(ErrorCode::kInvalidArgument, "mean ratio must be positive");
  }
  double sum = 0.0;
  for (double p : priors) {
    if (!(p > 0.0) || p > 1.0) throw Error(ErrorCode::kInvalidArgument, "priors must lie in (0, 1]");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, "priors must sum to 1 (got " + std::to_string(sum) + ")");
  }
}

LengthModelParams LengthModelParams::parse(std::string_view content) {
  LengthModelParams params;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kFormat, "expected key = value", line_number);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t\r") + 1);
    double number = 0.0;
    try {
      std::size_t used = 0;
      number = std::stod(value, &used);
      if (value.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kFormat, "bad number for '" + key + "'", line_number);
    }
    if (key == "mean_ratio") {
      params.mean_ratio = number;
    } else if (key == "variance") {
      params.variance = number;
    } else {
      bool found = false;
      for (GcMove move : kGcMoves) {
        if (key == std::string("prior.") + move_name(move)) {
          params.priors[static_cast<std::size_t>(move)] = number;
          found = true;
        }
      }
      if (!found) throw Error(ErrorCode::kFormat, "unknown key '" + key + "'", line_number);
    }
  }
  params.validate();
  return params;
}

LengthModelParams LengthModelParams::load(const std::filesystem::path& path) {
  try {
    return parse(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

double neg_log_two_sided_tail(double delta) {
  if (std::isnan(delta)) return kInf;
  const double z = std::fabs(delta) / std::sqrt(2.0);
  if (std::isinf(z)) return kInf;
  // 2 * (1 - Phi(|d|)) = erfc(|d| / sqrt 2); switch to the asymptotic series
  // before erfc underflows.
  if (z < 25.0) return -std::log(std::erfc(z));
  const double z2 = z * z;
  const double series = 1.0 - 1.0 / (2.0 * z2) + 3.0 / (4.0 * z2 * z2);
  return z2 + std::log(z * std::sqrt(M_PI)) - std::log(series);
}

double length_cost(long long src_len, long long tgt_len, GcMove move, const LengthModelParams& params) {
  if (src_len < 0 || tgt_len < 0) throw Error(ErrorCode::kInvalidArgument, "negative sentence length");
  const double prior_cost = -std::log(params.prior(move));
  if (move == GcMove::kOneZero || move == GcMove::kZeroOne) return prior_cost;
  double delta = 0.0;
  if (src_len == 0) {
    delta = tgt_len == 0 ? 0.0 : kInf;
  } else {
    const double s = static_cast<double>(src_len);
    delta = (static_cast<double>(tgt_len) - s * params.mean_ratio) / std::sqrt(s * params.variance);
  }
  return prior_cost + neg_log_two_sided_tail(delta);
}

Alignment alignment_from_moves(std::span<const GcMove> moves, std::size_t source_count, std::size_t target_count,
                               std::span<const std::size_t> src_lengths, std::span<const std::size_t> tgt_lengths,
                               const LengthModelParams& params) {
  Alignment alignment;
  alignment.source_count = source_count;
  alignment.target_count = target_count;
  std::size_t i = 0;
  std::size_t j = 0;
  for (GcMove move : moves) {
    const GcMoveShape shape = move_shape(move);
    AlignedGroup g;
    for (std::size_t k = 0; k < shape.src; ++k) g.src.push_back(i + k);
    for (std::size_t k = 0; k < shape.tgt; ++k) g.tgt.push_back(j + k);
    const double cost = length_cost(static_cast<long long>(range_sum(src_lengths, i, shape.src)),
                                    static_cast<long long>(range_sum(tgt_lengths, j, shape.tgt)), move, params);
    g.score = std::exp(-cost);
    alignment.groups.push_back(std::move(g));
    i += shape.src;
    j += shape.tgt;
  }
  alignment.complete();
  return alignment;
}

GcResult align_gc_lengths(std::span<const std::size_t> src_lengths, std::span<const std::size_t> tgt_lengths,
                          const LengthModelParams& params) {
  params.validate();
  const std::size_t n = src_lengths.size();
  const std::size_t m = tgt_lengths.size();
  const std::size_t width = m + 1;
  std::vector<double> cost((n + 1) * width, kInf);
  std::vector<GcMove> back((n + 1) * width, GcMove::kOneOne);
  cost[0] = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      double best = kInf;
      GcMove best_move = GcMove::kOneOne;
      for (GcMove move : kGcMoves) {
        const GcMoveShape shape = move_shape(move);
        if (i < shape.src || j < shape.tgt) continue;
        const double prev = cost[(i - shape.src) * width + (j - shape.tgt)];
        if (std::isinf(prev)) continue;
        const double step = length_cost(static_cast<long long>(range_sum(src_lengths, i - shape.src, shape.src)),
                                        static_cast<long long>(range_sum(tgt_lengths, j - shape.tgt, shape.tgt)),
                                        move, params);
        const double total = prev + step;
        if (total < best) {
          best = total;
          best_move = move;
        }
      }
      cost[i * width + j] = best;
      back[i * width + j] = best_move;
    }
  }

  GcResult result;
  result.total_cost = cost[n * width + m];
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const GcMove move = back[i * width + j];
    result.moves.push_back(move);
    const GcMoveShape shape = move_shape(move);
    i -= shape.src;
    j -= shape.tgt;
  }
  std::reverse(result.moves.begin(), result.moves.end());
  result.alignment = alignment_from_moves(result.moves, n, m, src_lengths, tgt_lengths, params);
  return result;
}

Alignment align_gc(const Text& src, const Text& tgt, const LengthModelParams& params) {
  const std::vector<std::size_t> src_lengths = sentence_lengths(src);
  const std::vector<std::size_t> tgt_lengths = sentence_lengths(tgt);
  return align_gc_lengths(src_lengths, tgt_lengths, params).alignment;
}

}  // namespace chunkalign
