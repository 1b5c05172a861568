#ifndef CHUNKALIGN_ALIGNMENT_H_
#define CHUNKALIGN_ALIGNMENT_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chunkalign {

enum class GroupKind {
  kOneOne,
  kOneMany,   // one source, several targets
  kManyOne,   // several sources, one target
  kManyMany,  // only produced by the length-based baseline (2-2)
  kDeletedSource,
  kDeletedTarget,
};

const char* group_kind_name(GroupKind kind);
std::optional<GroupKind> group_kind_from_name(std::string_view name);

// A set of source sentences aligned with a set of target sentences. Index
// lists are sorted ascending; one side is empty for deletion groups.
struct AlignedGroup {
  std::vector<std::size_t> src;
  std::vector<std::size_t> tgt;
  double score = 0.0;

  GroupKind kind() const;
  bool is_deletion() const { return src.empty() || tgt.empty(); }

  // Identity ignores the score.
  friend bool operator==(const AlignedGroup& a, const AlignedGroup& b) { return a.src == b.src && a.tgt == b.tgt; }
};

// Alignment of one text pair. After `complete()` every sentence of both
// sides belongs to exactly one group and groups are in output order.
struct Alignment {
  std::size_t source_count = 0;
  std::size_t target_count = 0;
  std::vector<AlignedGroup> groups;

  // Adds deletion groups for uncovered sentences and puts groups in output
  // order: by smallest source index, target deletions interleaved by target
  // index.
  void complete();

  std::vector<std::size_t> unaligned_source() const;
  std::vector<std::size_t> unaligned_target() const;
  // Groups with both sides non-empty.
  std::vector<AlignedGroup> aligned_groups() const;

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

// True if no two non-deletion groups cross: for groups g, h either every
// index of g precedes h on both sides or follows it on both sides.
bool is_monotone(const Alignment& alignment);
bool groups_cross(const AlignedGroup& a, const AlignedGroup& b);

// TSV: `src<TAB>tgt<TAB>score<TAB>kind`, comma-separated indices or `-`.
std::string to_tsv(const Alignment& alignment);
// Sizes are inferred as max index + 1 unless given.
Alignment parse_alignment_tsv(std::string_view content, std::optional<std::size_t> source_count = std::nullopt,
                              std::optional<std::size_t> target_count = std::nullopt);
Alignment load_alignment(const std::filesystem::path& path);

}  // namespace chunkalign

#endif  // CHUNKALIGN_ALIGNMENT_H_
