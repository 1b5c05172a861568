#include "chunkalign/many_many.h"

#include <algorithm>
#include <optional>

#include "chunkalign/error.h"

namespace chunkalign {

namespace {

// Drops deletion groups of indices that have since joined a group, then
// restores the canonical order.
Alignment rebuild(Alignment alignment) {
  std::vector<bool> src_aligned(alignment.source_count, false);
  std::vector<bool> tgt_aligned(alignment.target_count, false);
  for (const AlignedGroup& g : alignment.groups) {
    if (g.is_deletion()) continue;
    for (std::size_t s : g.src) src_aligned[s] = true;
    for (std::size_t t : g.tgt) tgt_aligned[t] = true;
  }
  std::erase_if(alignment.groups, [&](const AlignedGroup& g) {
    if (!g.is_deletion()) return false;
    return (!g.src.empty() && src_aligned[g.src.front()]) || (!g.tgt.empty() && tgt_aligned[g.tgt.front()]);
  });
  alignment.complete();
  return alignment;
}

// Index of the non-deletion group holding each sentence, per side.
struct Membership {
  std::vector<std::optional<std::size_t>> src;
  std::vector<std::optional<std::size_t>> tgt;

  explicit Membership(const Alignment& alignment)
      : src(alignment.source_count), tgt(alignment.target_count) {
    for (std::size_t i = 0; i < alignment.groups.size(); ++i) {
      const AlignedGroup& g = alignment.groups[i];
      if (g.is_deletion()) continue;
      for (std::size_t s : g.src) src[s] = i;
      for (std::size_t t : g.tgt) tgt[t] = i;
    }
  }
};

void insert_sorted(std::vector<std::size_t>& v, std::size_t x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); }

bool adjacent_to(const std::vector<std::size_t>& side, std::size_t x) {
  return x + 1 == side.front() || x == side.back() + 1;
}

std::size_t abs_diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

void ExtensionConfig::validate() const {
  if (ratio_bound.den == 0 || ratio_bound <= Ratio{1, 1}) {
    throw Error(ErrorCode::kInvalidArgument, "ratio bound must be greater than 1");
  }
  if (max_group_size < 2) throw Error(ErrorCode::kInvalidArgument, "max group size must be at least 2");
}

Alignment extend_by_chunk_counts(const Alignment& alignment, std::span<const std::size_t> source_chunks,
                                 std::span<const std::size_t> target_chunks, const ExtensionConfig& cfg) {
  cfg.validate();
  if (source_chunks.size() != alignment.source_count || target_chunks.size() != alignment.target_count) {
    throw Error(ErrorCode::kInvalidArgument, "chunk counts do not match the alignment");
  }
  const Ratio& rho = cfg.ratio_bound;
  // a / b > rho
  const auto exceeds = [&](std::size_t a, std::size_t b) {
    return static_cast<unsigned __int128>(a) * rho.den > static_cast<unsigned __int128>(rho.num) * b;
  };
  // 1/rho <= a / b <= rho
  const auto within = [&](std::size_t a, std::size_t b) { return !exceeds(a, b) && !exceeds(b, a); };

  Alignment out = alignment;
  std::vector<bool> src_free(out.source_count, true);
  std::vector<bool> tgt_free(out.target_count, true);
  for (const AlignedGroup& g : out.groups) {
    if (g.is_deletion()) continue;
    for (std::size_t s : g.src) src_free[s] = false;
    for (std::size_t t : g.tgt) tgt_free[t] = false;
  }

  // Picks the free neighbour of `index` minimizing |heavy - (light + n)|.
  const auto best_neighbour = [](std::size_t index, std::size_t size, const std::vector<bool>& free,
                                 std::span<const std::size_t> counts, std::size_t heavy, std::size_t light) {
    std::optional<std::size_t> best;
    for (std::size_t n : {index - 1, index + 1}) {
      if (index == 0 && n == index - 1) continue;
      if (n >= size || !free[n]) continue;
      if (!best || abs_diff(heavy, light + counts[n]) < abs_diff(heavy, light + counts[*best])) best = n;
    }
    return best;
  };

  // One sweep over the 1-1 groups; true if anything was attached.
  const auto sweep = [&] {
    bool changed = false;
    for (AlignedGroup& g : out.groups) {
      if (g.kind() != GroupKind::kOneOne) continue;
      const std::size_t s = g.src.front();
      const std::size_t t = g.tgt.front();
      const std::size_t cs = source_chunks[s];
      const std::size_t ct = target_chunks[t];
      if (cs == 0 || ct == 0) continue;
      if (exceeds(cs, ct)) {
        const auto n = best_neighbour(t, out.target_count, tgt_free, target_chunks, cs, ct);
        if (n && within(cs, ct + target_chunks[*n])) {
          insert_sorted(g.tgt, *n);
          tgt_free[*n] = false;
          changed = true;
        }
      } else if (exceeds(ct, cs)) {
        const auto n = best_neighbour(s, out.source_count, src_free, source_chunks, ct, cs);
        if (n && within(cs + source_chunks[*n], ct)) {
          insert_sorted(g.src, *n);
          src_free[*n] = false;
          changed = true;
        }
      }
    }
    return changed;
  };
  // An attachment can take the neighbour another group was weighing, so
  // sweep until nothing changes.
  while (sweep()) {
  }
  return rebuild(std::move(out));
}

Alignment extend_by_chunk_counts(const Alignment& alignment, const Text& src, const Text& tgt,
                                 const ExtensionConfig& cfg) {
  std::vector<std::size_t> source_chunks;
  std::vector<std::size_t> target_chunks;
  for (const Sentence& s : src.sentences) source_chunks.push_back(s.chunks.size());
  for (const Sentence& s : tgt.sentences) target_chunks.push_back(s.chunks.size());
  return extend_by_chunk_counts(alignment, source_chunks, target_chunks, cfg);
}

Alignment extend_by_rescoring(const Alignment& alignment, std::span<const CandidatePair> candidates,
                              const Ratio& threshold, const ExtensionConfig& cfg) {
  cfg.validate();
  Alignment out = alignment;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const CandidatePair& c : candidates) {
      if (c.score < threshold) continue;
      if (c.src_index >= out.source_count || c.tgt_index >= out.target_count) {
        throw Error(ErrorCode::kInvalidArgument, "candidate index out of range");
      }
      const Membership member(out);
      const auto& gs = member.src[c.src_index];
      const auto& gt = member.tgt[c.tgt_index];
      if (gs.has_value() == gt.has_value()) continue;

      AlignedGroup enlarged;
      std::size_t group_index = 0;
      if (!gs) {
        group_index = *gt;
        const AlignedGroup& g = out.groups[group_index];
        if (g.tgt.size() != 1 || g.src.size() >= cfg.max_group_size || !adjacent_to(g.src, c.src_index)) continue;
        enlarged = g;
        insert_sorted(enlarged.src, c.src_index);
      } else {
        group_index = *gs;
        const AlignedGroup& g = out.groups[group_index];
        if (g.src.size() != 1 || g.tgt.size() >= cfg.max_group_size || !adjacent_to(g.tgt, c.tgt_index)) continue;
        enlarged = g;
        insert_sorted(enlarged.tgt, c.tgt_index);
      }
      bool crosses = false;
      for (std::size_t i = 0; i < out.groups.size() && !crosses; ++i) {
        if (i != group_index && !out.groups[i].is_deletion()) crosses = groups_cross(enlarged, out.groups[i]);
      }
      if (crosses) continue;
      out.groups[group_index] = std::move(enlarged);
      out = rebuild(std::move(out));
      changed = true;
    }
  }
  return out;
}

Alignment extend_many_many(const Alignment& alignment, const Text& src, const Text& tgt,
                           std::span<const CandidatePair> candidates, const Ratio& threshold,
                           const ExtensionConfig& cfg) {
  Alignment out = alignment;
  if (cfg.use_chunk_counts) out = extend_by_chunk_counts(out, src, tgt, cfg);
  if (cfg.use_rescoring) out = extend_by_rescoring(out, candidates, threshold, cfg);
  return out;
}

}  // namespace chunkalign
