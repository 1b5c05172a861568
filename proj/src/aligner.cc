#include "chunkalign/aligner.h"

#include <algorithm>
#include <map>

#include "chunkalign/error.h"

namespace chunkalign {

void AlignerConfig::validate() const {
  if (threshold.num == 0 || threshold.den == 0) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be greater than 0");
  }
}

bool candidate_order(const CandidatePair& a, const CandidatePair& b) {
  const auto by_score = a.score <=> b.score;
  if (by_score != 0) return by_score > 0;
  if (a.src_index != b.src_index) return a.src_index < b.src_index;
  return a.tgt_index < b.tgt_index;
}

void sort_candidates(std::vector<CandidatePair>& candidates) {
  std::sort(candidates.begin(), candidates.end(), candidate_order);
}

std::size_t count_matching_chunks(const PreparedSentence& src, const PreparedSentence& tgt, const Matcher& matcher) {
  std::vector<bool> used(tgt.chunks.size(), false);
  std::size_t matched = 0;
  for (const PreparedChunk& s : src.chunks) {
    for (std::size_t j = 0; j < tgt.chunks.size(); ++j) {
      if (!used[j] && matcher.match_chunks(s, tgt.chunks[j])) {
        used[j] = true;
        ++matched;
        break;
      }
    }
  }
  return matched;
}

CandidatePair score_of_match(const PreparedSentence& src, const PreparedSentence& tgt, std::size_t src_index,
                             std::size_t tgt_index, const Matcher& matcher) {
  CandidatePair pair;
  pair.src_index = src_index;
  pair.tgt_index = tgt_index;
  const std::size_t denominator = std::max(src.chunks.size(), tgt.chunks.size());
  if (src.chunks.empty() || tgt.chunks.empty()) {
    pair.score = Ratio{0, 1};
    return pair;
  }
  pair.matching_chunks = count_matching_chunks(src, tgt, matcher);
  pair.score = Ratio{pair.matching_chunks, denominator};
  return pair;
}

CandidatePair score_of_match(const Sentence& src, const Sentence& tgt, const Matcher& matcher) {
  return score_of_match(matcher.prepare_source(src), matcher.prepare_target(tgt), src.index, tgt.index, matcher);
}

PreparedText prepare_source(const Text& text, const Matcher& matcher) {
  PreparedText out;
  for (const Sentence& s : text.sentences) out.sentences.push_back(matcher.prepare_source(s));
  return out;
}

PreparedText prepare_target(const Text& text, const Matcher& matcher) {
  PreparedText out;
  for (const Sentence& s : text.sentences) out.sentences.push_back(matcher.prepare_target(s));
  return out;
}

std::vector<CandidatePair> build_candidates(const PreparedText& src, const PreparedText& tgt,
                                            const AlignerConfig& cfg, const Matcher& matcher) {
  cfg.validate();
  const std::size_t n = src.sentences.size();
  const std::size_t m = tgt.sentences.size();
  std::vector<CandidatePair> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (cfg.window) {
        // |i * m / n - j| <= W, compared in integers.
        const long long lhs = static_cast<long long>(i * m) - static_cast<long long>(j * n);
        if (static_cast<unsigned long long>(lhs < 0 ? -lhs : lhs) > *cfg.window * n) continue;
      }
      CandidatePair pair = score_of_match(src.sentences[i], tgt.sentences[j], i, j, matcher);
      if (pair.score >= cfg.threshold) out.push_back(pair);
    }
  }
  sort_candidates(out);
  return out;
}

std::vector<CandidatePair> build_candidates(const Text& src, const Text& tgt, const AlignerConfig& cfg,
                                            const Matcher& matcher) {
  return build_candidates(prepare_source(src, matcher), prepare_target(tgt, matcher), cfg, matcher);
}

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAccepted: return "accepted";
    case Verdict::kBelowThreshold: return "below-threshold";
    case Verdict::kSourceTaken: return "source-taken";
    case Verdict::kTargetTaken: return "target-taken";
    case Verdict::kCrossing: return "crossing";
  }
  return "?";
}

Alignment align_one_one(std::span<const CandidatePair> candidates, std::size_t source_count,
                        std::size_t target_count, const Ratio& threshold, std::vector<ScanStep>* trace) {
  std::vector<CandidatePair> sorted(candidates.begin(), candidates.end());
  sort_candidates(sorted);
  std::vector<bool> src_used(source_count, false);
  std::vector<bool> tgt_used(target_count, false);
  // Accepted pairs keyed by source index; monotone, so checking the nearest
  // neighbours on the source side decides crossing against all of them.
  std::map<std::size_t, std::size_t> accepted;
  Alignment alignment;
  alignment.source_count = source_count;
  alignment.target_count = target_count;
  const auto verdict_for = [&](const CandidatePair& c) {
    if (c.score < threshold) return Verdict::kBelowThreshold;
    if (src_used[c.src_index]) return Verdict::kSourceTaken;
    if (tgt_used[c.tgt_index]) return Verdict::kTargetTaken;
    const auto next = accepted.upper_bound(c.src_index);
    if (next != accepted.end() && next->second < c.tgt_index) return Verdict::kCrossing;
    if (next != accepted.begin() && std::prev(next)->second > c.tgt_index) return Verdict::kCrossing;
    return Verdict::kAccepted;
  };
  for (const CandidatePair& c : sorted) {
    if (c.src_index >= source_count || c.tgt_index >= target_count) {
      throw Error(ErrorCode::kInvalidArgument, "candidate index out of range");
    }
    const Verdict verdict = verdict_for(c);
    if (trace != nullptr) trace->push_back(ScanStep{c, verdict});
    if (verdict != Verdict::kAccepted) continue;
    accepted.emplace(c.src_index, c.tgt_index);
    src_used[c.src_index] = true;
    tgt_used[c.tgt_index] = true;
    alignment.groups.push_back(AlignedGroup{{c.src_index}, {c.tgt_index}, c.score.value()});
  }
  alignment.complete();
  return alignment;
}

}  // namespace chunkalign
