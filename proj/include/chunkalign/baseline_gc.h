#ifndef CHUNKALIGN_BASELINE_GC_H_
#define CHUNKALIGN_BASELINE_GC_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "chunkalign/alignment.h"
#include "chunkalign/corpus.h"

namespace chunkalign {

// Moves of the length-based dynamic program, in tie-break preference order:
// 1-1 first, then moves consuming fewer sentences.
enum class GcMove { kOneOne, kOneZero, kZeroOne, kTwoOne, kOneTwo, kTwoTwo };

inline constexpr std::array<GcMove, 6> kGcMoves = {GcMove::kOneOne, GcMove::kOneZero, GcMove::kZeroOne,
                                                  GcMove::kTwoOne, GcMove::kOneTwo,  GcMove::kTwoTwo};

struct GcMoveShape {
  std::size_t src;
  std::size_t tgt;
};
GcMoveShape move_shape(GcMove move);
const char* move_name(GcMove move);

struct LengthModelParams {
  double mean_ratio = 1.0;  // expected target chars per source char
  double variance = 6.8;    // per source char
  // Indexed by GcMove.
  std::array<double, 6> priors = {0.89, 0.00495, 0.00495, 0.0445, 0.0445, 0.0111};

  double prior(GcMove move) const { return priors[static_cast<std::size_t>(move)]; }
  void validate() const;

  // `key = value` lines: mean_ratio, variance, prior.1-1, prior.1-0,
  // prior.0-1, prior.2-1, prior.1-2, prior.2-2. Unlisted keys keep defaults.
  static LengthModelParams parse(std::string_view content);
  static LengthModelParams load(const std::filesystem::path& path);
};

// -log(2 * (1 - Phi(|delta|))), finite for every finite delta.
double neg_log_two_sided_tail(double delta);

// -log prior(move) - log p(delta) with delta = (tgt - src*c) / sqrt(src*s2).
// Deletion moves cost -log prior(move) alone. Throws on negative lengths.
double length_cost(long long src_len, long long tgt_len, GcMove move, const LengthModelParams& params);

struct GcResult {
  std::vector<GcMove> moves;  // in text order
  double total_cost = 0.0;
  Alignment alignment;
};

// Minimum-cost monotone path over prefix pairs. Costs accumulate from the
// start of the texts; equal totals go to the earlier move in kGcMoves.
GcResult align_gc_lengths(std::span<const std::size_t> src_lengths, std::span<const std::size_t> tgt_lengths,
                          const LengthModelParams& params);
Alignment align_gc(const Text& src, const Text& tgt, const LengthModelParams& params);

// Alignment groups for a move sequence.
Alignment alignment_from_moves(std::span<const GcMove> moves, std::size_t source_count, std::size_t target_count,
                               std::span<const std::size_t> src_lengths, std::span<const std::size_t> tgt_lengths,
                               const LengthModelParams& params);

}  // namespace chunkalign

#endif  // CHUNKALIGN_BASELINE_GC_H_
