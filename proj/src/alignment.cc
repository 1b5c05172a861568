#include "chunkalign/alignment.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <sstream>

#include "chunkalign/corpus.h"
#include "chunkalign/error.h"
#include "chunkalign/ratio.h"

namespace chunkalign {

namespace {

constexpr std::array<std::pair<GroupKind, const char*>, 6> kKindNames = {{
    {GroupKind::kOneOne, "1-1"},
    {GroupKind::kOneMany, "1-N"},
    {GroupKind::kManyOne, "N-1"},
    {GroupKind::kManyMany, "N-M"},
    {GroupKind::kDeletedSource, "del-src"},
    {GroupKind::kDeletedTarget, "del-tgt"},
}};

std::string join_indices(const std::vector<std::size_t>& indices) {
  if (indices.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices[i]);
  }
  return out;
}

std::vector<std::size_t> parse_indices(std::string_view field, std::size_t line) {
  std::vector<std::size_t> out;
  if (field == "-") return out;
  std::size_t begin = 0;
  while (begin <= field.size()) {
    std::size_t comma = field.find(',', begin);
    if (comma == std::string_view::npos) comma = field.size();
    const std::string_view item = field.substr(begin, comma - begin);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kFormat, "bad index list '" + std::string(field) + "'", line);
    }
    out.push_back(value);
    begin = comma + 1;
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw Error(ErrorCode::kFormat, "repeated index in '" + std::string(field) + "'", line);
  }
  return out;
}

}  // namespace

const char* group_kind_name(GroupKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GroupKind> group_kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  return std::nullopt;
}

GroupKind AlignedGroup::kind() const {
  if (tgt.empty()) return GroupKind::kDeletedSource;
  if (src.empty()) return GroupKind::kDeletedTarget;
  if (src.size() == 1 && tgt.size() == 1) return GroupKind::kOneOne;
  if (src.size() == 1) return GroupKind::kOneMany;
  if (tgt.size() == 1) return GroupKind::kManyOne;
  return GroupKind::kManyMany;
}

void Alignment::complete() {
  std::vector<bool> src_seen(source_count, false);
  std::vector<bool> tgt_seen(target_count, false);
  for (const AlignedGroup& g : groups) {
    for (std::size_t s : g.src) {
      if (s < source_count) src_seen[s] = true;
    }
    for (std::size_t t : g.tgt) {
      if (t < target_count) tgt_seen[t] = true;
    }
  }
  for (std::size_t s = 0; s < source_count; ++s) {
    if (!src_seen[s]) groups.push_back(AlignedGroup{{s}, {}, 0.0});
  }
  for (std::size_t t = 0; t < target_count; ++t) {
    if (!tgt_seen[t]) groups.push_back(AlignedGroup{{}, {t}, 0.0});
  }

  std::vector<AlignedGroup> with_source;
  std::deque<AlignedGroup> target_only;
  for (AlignedGroup& g : groups) {
    if (g.src.empty()) {
      target_only.push_back(std::move(g));
    } else {
      with_source.push_back(std::move(g));
    }
  }
  std::stable_sort(with_source.begin(), with_source.end(),
                   [](const AlignedGroup& a, const AlignedGroup& b) { return a.src.front() < b.src.front(); });
  std::stable_sort(target_only.begin(), target_only.end(),
                   [](const AlignedGroup& a, const AlignedGroup& b) { return a.tgt.front() < b.tgt.front(); });
  groups.clear();
  for (AlignedGroup& g : with_source) {
    if (!g.tgt.empty()) {
      while (!target_only.empty() && target_only.front().tgt.front() < g.tgt.front()) {
        groups.push_back(std::move(target_only.front()));
        target_only.pop_front();
      }
    }
    groups.push_back(std::move(g));
  }
  for (AlignedGroup& g : target_only) groups.push_back(std::move(g));
}

std::vector<std::size_t> Alignment::unaligned_source() const {
  std::vector<std::size_t> out;
  for (const AlignedGroup& g : groups) {
    if (g.tgt.empty()) out.insert(out.end(), g.src.begin(), g.src.end());
  }
  std::vector<bool> seen(source_count, false);
  for (const AlignedGroup& g : groups) {
    for (std::size_t s : g.src) {
      if (s < source_count) seen[s] = true;
    }
  }
  for (std::size_t s = 0; s < source_count; ++s) {
    if (!seen[s]) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Alignment::unaligned_target() const {
  std::vector<std::size_t> out;
  for (const AlignedGroup& g : groups) {
    if (g.src.empty()) out.insert(out.end(), g.tgt.begin(), g.tgt.end());
  }
  std::vector<bool> seen(target_count, false);
  for (const AlignedGroup& g : groups) {
    for (std::size_t t : g.tgt) {
      if (t < target_count) seen[t] = true;
    }
  }
  for (std::size_t t = 0; t < target_count; ++t) {
    if (!seen[t]) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlignedGroup> Alignment::aligned_groups() const {
  std::vector<AlignedGroup> out;
  for (const AlignedGroup& g : groups) {
    if (!g.is_deletion()) out.push_back(g);
  }
  return out;
}

bool groups_cross(const AlignedGroup& a, const AlignedGroup& b) {
  const bool before = a.src.back() < b.src.front() && a.tgt.back() < b.tgt.front();
  const bool after = b.src.back() < a.src.front() && b.tgt.back() < a.tgt.front();
  return !before && !after;
}

bool is_monotone(const Alignment& alignment) {
  const std::vector<AlignedGroup> aligned = alignment.aligned_groups();
  for (std::size_t i = 0; i < aligned.size(); ++i) {
    for (std::size_t j = i + 1; j < aligned.size(); ++j) {
      if (groups_cross(aligned[i], aligned[j])) return false;
    }
  }
  return true;
}

std::string to_tsv(const Alignment& alignment) {
  std::string out;
  for (const AlignedGroup& g : alignment.groups) {
    out += join_indices(g.src);
    out += '\t';
    out += join_indices(g.tgt);
    out += '\t';
    out += format_fixed4(g.score);
    out += '\t';
    out += group_kind_name(g.kind());
    out += '\n';
  }
  return out;
}

Alignment parse_alignment_tsv(std::string_view content, std::optional<std::size_t> source_count,
                              std::optional<std::size_t> target_count) {
  Alignment alignment;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_number = 0;
  std::size_t max_src = 0;
  std::size_t max_tgt = 0;
  std::vector<std::size_t> all_src;
  std::vector<std::size_t> all_tgt;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
      const std::size_t tab = line.find('\t', begin);
      fields.push_back(line.substr(begin, tab == std::string::npos ? std::string::npos : tab - begin));
      if (tab == std::string::npos) break;
      begin = tab + 1;
    }
    if (fields.size() != 4) throw Error(ErrorCode::kFormat, "expected 4 tab-separated fields", line_number);
    AlignedGroup g;
    g.src = parse_indices(fields[0], line_number);
    g.tgt = parse_indices(fields[1], line_number);
    if (g.src.empty() && g.tgt.empty()) throw Error(ErrorCode::kFormat, "group with no indices", line_number);
    const char* first = fields[2].data();
    const auto [ptr, ec] = std::from_chars(first, first + fields[2].size(), g.score);
    if (fields[2].empty() || ec != std::errc() || ptr != first + fields[2].size()) {
      throw Error(ErrorCode::kFormat, "bad score '" + fields[2] + "'", line_number);
    }
    const std::optional<GroupKind> kind = group_kind_from_name(fields[3]);
    if (!kind) throw Error(ErrorCode::kFormat, "unknown kind '" + fields[3] + "'", line_number);
    if (*kind != g.kind()) {
      throw Error(ErrorCode::kFormat, "kind '" + fields[3] + "' does not match the index sets", line_number);
    }
    for (std::size_t s : g.src) {
      max_src = std::max(max_src, s + 1);
      all_src.push_back(s);
    }
    for (std::size_t t : g.tgt) {
      max_tgt = std::max(max_tgt, t + 1);
      all_tgt.push_back(t);
    }
    alignment.groups.push_back(std::move(g));
  }
  for (std::vector<std::size_t>* all : {&all_src, &all_tgt}) {
    std::sort(all->begin(), all->end());
    if (std::adjacent_find(all->begin(), all->end()) != all->end()) {
      throw Error(ErrorCode::kFormat, "sentence appears in more than one group");
    }
  }
  alignment.source_count = source_count.value_or(max_src);
  alignment.target_count = target_count.value_or(max_tgt);
  if (max_src > alignment.source_count || max_tgt > alignment.target_count) {
    throw Error(ErrorCode::kFormat, "index out of range");
  }
  alignment.complete();
  return alignment;
}

Alignment load_alignment(const std::filesystem::path& path) {
  try {
    return parse_alignment_tsv(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace chunkalign
