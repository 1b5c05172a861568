#ifndef CHUNKALIGN_MANY_MANY_H_
#define CHUNKALIGN_MANY_MANY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "chunkalign/aligner.h"
#include "chunkalign/alignment.h"
#include "chunkalign/corpus.h"
#include "chunkalign/ratio.h"

namespace chunkalign {

struct ExtensionConfig {
  // Chunk-count imbalance that triggers an attachment, and the band the
  // merged counts must land in. Must exceed 1.
  Ratio ratio_bound{3, 2};
  bool use_chunk_counts = true;
  bool use_rescoring = true;
  // Largest number of sentences on the "many" side of a group.
  std::size_t max_group_size = 3;

  void validate() const;
};

// For a 1-1 group whose chunk counts differ by more than the ratio bound,
// attaches the unaligned neighbour (index +-1 on the lighter side) whose
// chunks bring the two sides closest, provided the merged ratio falls inside
// [1/bound, bound]. Existing groups are only enlarged.
Alignment extend_by_chunk_counts(const Alignment& alignment, std::span<const std::size_t> source_chunks,
                                 std::span<const std::size_t> target_chunks, const ExtensionConfig& cfg);
Alignment extend_by_chunk_counts(const Alignment& alignment, const Text& src, const Text& tgt,
                                 const ExtensionConfig& cfg);

// Rescans the sorted candidates, ignoring the one-one rule: a candidate with
// exactly one unaligned sentence attaches it to the group of the other when
// it is adjacent to that group on its own side and no group ends up
// crossing. Repeats until nothing changes.
Alignment extend_by_rescoring(const Alignment& alignment, std::span<const CandidatePair> candidates,
                              const Ratio& threshold, const ExtensionConfig& cfg);

// Chunk-count extension then rescoring, each if enabled.
Alignment extend_many_many(const Alignment& alignment, const Text& src, const Text& tgt,
                           std::span<const CandidatePair> candidates, const Ratio& threshold,
                           const ExtensionConfig& cfg);

}  // namespace chunkalign

#endif  // CHUNKALIGN_MANY_MANY_H_
