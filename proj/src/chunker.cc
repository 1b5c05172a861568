#include "chunkalign/chunker.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "chunkalign/error.h"
#include "chunkalign/matcher.h"
#include "chunkalign/shipped_resources.h"
#include "chunkalign/unicode.h"

namespace chunkalign {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

HeadPolicy parse_head_policy(const std::string& value, std::size_t line) {
  if (value == "last_content") return HeadPolicy::kLastContent;
  if (value == "first_content") return HeadPolicy::kFirstContent;
  throw Error(ErrorCode::kFormat, "unknown head policy '" + value + "'", line);
}

std::vector<std::string> split_words(const std::string& value) {
  std::vector<std::string> out;
  std::istringstream in(value);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::size_t pick_content(const Chunk& chunk, HeadPolicy policy) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < chunk.tokens.size(); ++i) {
    if (!is_content_role(chunk.tokens[i].role)) continue;
    if (policy == HeadPolicy::kFirstContent) return i;
    found = i;
  }
  if (!found) throw Error(ErrorCode::kFormat, "headless chunk");
  return *found;
}

void fill_content(Chunk& chunk, std::size_t head) {
  chunk.head_index = head;
  chunk.content_positions.clear();
  if (chunk.kind == ChunkKind::kVerb) {
    chunk.content_positions.push_back(head);
    return;
  }
  for (std::size_t i = 0; i < chunk.tokens.size(); ++i) {
    if (is_content_role(chunk.tokens[i].role)) chunk.content_positions.push_back(i);
  }
}

}  // namespace

bool RoleElement::accepts(TokenRole role) const {
  return std::find(alternatives.begin(), alternatives.end(), role) != alternatives.end();
}

std::vector<RoleElement> parse_role_pattern(std::string_view pattern) {
  std::vector<RoleElement> out;
  std::istringstream in{std::string(pattern)};
  std::string item;
  while (in >> item) {
    RoleElement element;
    const char last = item.back();
    if (last == '?' || last == '*' || last == '+') {
      element.quantifier = last;
      item.pop_back();
    }
    if (item.size() >= 2 && item.front() == '(' && item.back() == ')') item = item.substr(1, item.size() - 2);
    std::size_t begin = 0;
    while (begin <= item.size()) {
      std::size_t bar = item.find('|', begin);
      if (bar == std::string::npos) bar = item.size();
      const std::string name = item.substr(begin, bar - begin);
      const std::optional<TokenRole> role = role_from_name(name);
      if (!role) throw Error(ErrorCode::kFormat, "unknown role '" + name + "' in pattern");
      element.alternatives.push_back(*role);
      begin = bar + 1;
    }
    out.push_back(std::move(element));
  }
  if (out.empty()) throw Error(ErrorCode::kFormat, "empty pattern");
  return out;
}

std::optional<std::size_t> longest_match(const ChunkRule& rule, std::span<const Token> tokens, std::size_t start) {
  // Set of positions reachable after each element.
  std::set<std::size_t> reachable{start};
  for (const RoleElement& element : rule.pattern) {
    std::set<std::size_t> next;
    const auto step = [&](const std::set<std::size_t>& from) {
      std::set<std::size_t> out;
      for (std::size_t p : from) {
        if (p < tokens.size() && element.accepts(tokens[p].role)) out.insert(p + 1);
      }
      return out;
    };
    const auto closure = [&](std::set<std::size_t> from) {
      std::set<std::size_t> all = from;
      while (!from.empty()) {
        from = step(from);
        std::set<std::size_t> fresh;
        for (std::size_t p : from) {
          if (all.insert(p).second) fresh.insert(p);
        }
        from = std::move(fresh);
      }
      return all;
    };
    switch (element.quantifier) {
      case '1':
        next = step(reachable);
        break;
      case '?':
        next = reachable;
        for (std::size_t p : step(reachable)) next.insert(p);
        break;
      case '*':
        next = closure(reachable);
        break;
      case '+':
        next = closure(step(reachable));
        break;
    }
    reachable = std::move(next);
    if (reachable.empty()) return std::nullopt;
  }
  const std::size_t end = *reachable.rbegin();
  if (end == start) return std::nullopt;
  return end;
}

ChunkRuleSet ChunkRuleSet::parse(std::string_view content) {
  ChunkRuleSet rules;
  enum class Section { kHeader, kWords, kRules } section = Section::kHeader;
  std::istringstream in{std::string(content)};
  std::string raw;
  std::size_t line_number = 0;
  std::unordered_map<std::string, std::string> claimed;  // word -> role list name
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line == "[words]") {
        section = Section::kWords;
      } else if (line == "[rules]") {
        section = Section::kRules;
      } else {
        throw Error(ErrorCode::kFormat, "unknown section " + line, line_number);
      }
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kFormat, "expected key = value", line_number);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    switch (section) {
      case Section::kHeader:
        if (key == "language") {
          rules.language_ = value;
        } else if (key == "head.noun") {
          rules.noun_head_ = parse_head_policy(value, line_number);
        } else if (key == "head.verb") {
          rules.verb_head_ = parse_head_policy(value, line_number);
        } else if (key == "suffixes") {
          for (const std::string& s : split_words(value)) rules.suffixes_.push_back(unicode::nfc(s));
        } else {
          throw Error(ErrorCode::kFormat, "unknown key '" + key + "'", line_number);
        }
        break;
      case Section::kWords: {
        const std::optional<TokenRole> role = role_from_name(key);
        if (!role || *role == TokenRole::kContent || *role == TokenRole::kNumeral ||
            *role == TokenRole::kPunctuation || *role == TokenRole::kUnknown) {
          throw Error(ErrorCode::kFormat, "not a word-list role: '" + key + "'", line_number);
        }
        for (const std::string& w : split_words(value)) {
          const std::string word = normalize(w);
          if (word.empty()) continue;
          const auto [it, inserted] = claimed.emplace(word, key);
          if (!inserted && it->second != key) {
            throw Error(ErrorCode::kFormat, "'" + word + "' listed as both " + it->second + " and " + key,
                        line_number);
          }
          rules.words_[word] = *role;
        }
        break;
      }
      case Section::kRules: {
        ChunkRule rule;
        if (key == "noun") {
          rule.kind = ChunkKind::kNoun;
        } else if (key == "verb") {
          rule.kind = ChunkKind::kVerb;
        } else {
          throw Error(ErrorCode::kFormat, "rule kind must be noun or verb", line_number);
        }
        try {
          rule.pattern = parse_role_pattern(value);
        } catch (const Error& e) {
          throw Error(ErrorCode::kFormat, e.what(), line_number);
        }
        rule.text = value;
        rules.rules_.push_back(std::move(rule));
        break;
      }
    }
  }
  if (rules.language_.empty()) throw Error(ErrorCode::kFormat, "rule file has no language");
  std::stable_sort(rules.suffixes_.begin(), rules.suffixes_.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  return rules;
}

ChunkRuleSet ChunkRuleSet::load(const std::filesystem::path& path) {
  try {
    return parse(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

ChunkRuleSet ChunkRuleSet::shipped(std::string_view language) {
  if (language == "en") return parse(shipped::english_rules());
  if (language == "hi") return parse(shipped::hindi_rules());
  throw Error(ErrorCode::kInvalidArgument, "no shipped rules for language '" + std::string(language) + "'");
}

HeadPolicy ChunkRuleSet::head_policy(ChunkKind kind) const {
  return kind == ChunkKind::kNoun ? noun_head_ : verb_head_;
}

TokenRole ChunkRuleSet::role_of(std::string_view word) const {
  const TokenRole shape = shape_role(word);
  if (shape != TokenRole::kUnknown) return shape;
  const auto it = words_.find(normalize(word));
  return it == words_.end() ? TokenRole::kContent : it->second;
}

TokenRole shape_role(std::string_view word) {
  if (normalize(word).empty()) return TokenRole::kPunctuation;
  if (canonical_number(word)) return TokenRole::kNumeral;
  return TokenRole::kUnknown;
}

void assign_roles(Sentence& sentence, const ChunkRuleSet& rules) {
  for (Token& t : sentence.tokens) t.role = rules.role_of(t.text);
}

std::size_t select_head(const Chunk& chunk, const ChunkRuleSet& rules) {
  return pick_content(chunk, rules.head_policy(chunk.kind));
}

std::size_t select_head(const Chunk& chunk) { return pick_content(chunk, HeadPolicy::kLastContent); }

void finalize_chunk(Chunk& chunk, const ChunkRuleSet& rules) { fill_content(chunk, select_head(chunk, rules)); }

void finalize_chunk(Chunk& chunk) { fill_content(chunk, select_head(chunk)); }

Sentence chunk_sentence(Sentence sentence, const ChunkRuleSet& rules) {
  for (Token& t : sentence.tokens) {
    if (t.role == TokenRole::kUnknown) t.role = rules.role_of(t.text);
  }
  sentence.chunks.clear();
  const std::span<const Token> tokens(sentence.tokens);
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    std::size_t best_end = pos;
    const ChunkRule* best = nullptr;
    for (const ChunkRule& rule : rules.rules()) {
      const std::optional<std::size_t> end = longest_match(rule, tokens, pos);
      if (end && *end > best_end) {
        best_end = *end;
        best = &rule;
      }
    }
    Chunk chunk;
    chunk.first_token = pos;
    if (best != nullptr) {
      chunk.kind = best->kind;
      chunk.tokens.assign(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                          tokens.begin() + static_cast<std::ptrdiff_t>(best_end));
    } else if (is_content_role(tokens[pos].role)) {
      chunk.kind = ChunkKind::kNoun;
      chunk.tokens.push_back(tokens[pos]);
      best_end = pos + 1;
    } else {
      ++pos;
      continue;
    }
    // A pattern made only of function words has no head; keep the tokens
    // outside any chunk.
    if (std::none_of(chunk.tokens.begin(), chunk.tokens.end(),
                     [](const Token& t) { return is_content_role(t.role); })) {
      ++pos;
      continue;
    }
    finalize_chunk(chunk, rules);
    sentence.chunks.push_back(std::move(chunk));
    pos = best_end;
  }
  return sentence;
}

void chunk_text(Text& text, const ChunkRuleSet& rules) {
  for (Sentence& s : text.sentences) s = chunk_sentence(std::move(s), rules);
}

}  // namespace chunkalign
