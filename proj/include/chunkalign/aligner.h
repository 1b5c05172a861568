#ifndef CHUNKALIGN_ALIGNER_H_
#define CHUNKALIGN_ALIGNER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chunkalign/alignment.h"
#include "chunkalign/corpus.h"
#include "chunkalign/matcher.h"
#include "chunkalign/ratio.h"

namespace chunkalign {

struct CandidatePair {
  std::size_t src_index = 0;
  std::size_t tgt_index = 0;
  Ratio score;  // matching_chunks / max(source chunks, target chunks)
  std::size_t matching_chunks = 0;

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

struct AlignerConfig {
  Ratio threshold{1, 10};
  // Band half-width around the length-scaled diagonal; unset means all pairs.
  std::optional<std::size_t> window;

  void validate() const;
};

// Score descending, then source index, then target index.
bool candidate_order(const CandidatePair& a, const CandidatePair& b);
void sort_candidates(std::vector<CandidatePair>& candidates);

// Number of source chunks that find an unconsumed matching target chunk,
// scanning both sides in order.
std::size_t count_matching_chunks(const PreparedSentence& src, const PreparedSentence& tgt, const Matcher& matcher);

CandidatePair score_of_match(const PreparedSentence& src, const PreparedSentence& tgt, std::size_t src_index,
                             std::size_t tgt_index, const Matcher& matcher);
CandidatePair score_of_match(const Sentence& src, const Sentence& tgt, const Matcher& matcher);

struct PreparedText {
  std::vector<PreparedSentence> sentences;
};

PreparedText prepare_source(const Text& text, const Matcher& matcher);
PreparedText prepare_target(const Text& text, const Matcher& matcher);

// Pairs at or above the threshold (inside the window when set), sorted by
// candidate_order.
std::vector<CandidatePair> build_candidates(const PreparedText& src, const PreparedText& tgt,
                                            const AlignerConfig& cfg, const Matcher& matcher);
std::vector<CandidatePair> build_candidates(const Text& src, const Text& tgt, const AlignerConfig& cfg,
                                            const Matcher& matcher);

enum class Verdict { kAccepted, kBelowThreshold, kSourceTaken, kTargetTaken, kCrossing };
const char* verdict_name(Verdict verdict);

struct ScanStep {
  CandidatePair candidate;
  Verdict verdict = Verdict::kAccepted;
};

// Greedy scan over the candidates in candidate_order. A pair is accepted when
// its score reaches `threshold`, neither sentence is aligned yet, and it does
// not cross an accepted pair. The result is completed with deletion groups.
// `trace`, when given, receives one step per candidate in scan order.
Alignment align_one_one(std::span<const CandidatePair> candidates, std::size_t source_count,
                        std::size_t target_count, const Ratio& threshold = Ratio{0, 1},
                        std::vector<ScanStep>* trace = nullptr);

}  // namespace chunkalign

#endif  // CHUNKALIGN_ALIGNER_H_
