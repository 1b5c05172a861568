#ifndef CHUNKALIGN_CHUNKER_H_
#define CHUNKALIGN_CHUNKER_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chunkalign/corpus.h"

namespace chunkalign {

enum class HeadPolicy { kLastContent, kFirstContent };

// One element of a role pattern, e.g. `(content|numeral)+`.
struct RoleElement {
  std::vector<TokenRole> alternatives;
  char quantifier = '1';  // one of '1', '?', '*', '+'

  bool accepts(TokenRole role) const;
};

struct ChunkRule {
  ChunkKind kind = ChunkKind::kNoun;
  std::vector<RoleElement> pattern;
  std::string text;  // pattern as written in the rule file
};

// Parses `adposition? determiner? (content|numeral)+` style patterns.
std::vector<RoleElement> parse_role_pattern(std::string_view pattern);

// End offset of the longest match of `rule` starting at `start`, or nullopt
// when the rule matches nothing there. Empty matches are never returned.
std::optional<std::size_t> longest_match(const ChunkRule& rule, std::span<const Token> tokens,
                                         std::size_t start);

// Per-language chunking configuration.
//
// File layout: `key = value` lines before the first section (language,
// head.noun, head.verb, suffixes), a `[words]` section mapping role names to
// whitespace-separated word lists, and a `[rules]` section of
// `noun = <pattern>` / `verb = <pattern>` lines, tried in file order.
class ChunkRuleSet {
 public:
  static ChunkRuleSet parse(std::string_view content);
  static ChunkRuleSet load(const std::filesystem::path& path);
  // Rules compiled into the library; "en" and "hi".
  static ChunkRuleSet shipped(std::string_view language);

  const std::string& language() const { return language_; }
  const std::vector<ChunkRule>& rules() const { return rules_; }
  HeadPolicy head_policy(ChunkKind kind) const;
  // Stemming suffixes, longest first.
  const std::vector<std::string>& suffixes() const { return suffixes_; }

  // Role of a surface word: punctuation and numerals by shape, then the word
  // lists, otherwise content.
  TokenRole role_of(std::string_view word) const;

 private:
  std::string language_;
  std::vector<ChunkRule> rules_;
  HeadPolicy noun_head_ = HeadPolicy::kLastContent;
  HeadPolicy verb_head_ = HeadPolicy::kLastContent;
  std::vector<std::string> suffixes_;
  std::unordered_map<std::string, TokenRole> words_;
};

// Role from word shape alone: punctuation, numeral, or kUnknown.
TokenRole shape_role(std::string_view word);

void assign_roles(Sentence& sentence, const ChunkRuleSet& rules);

// Head position inside `chunk.tokens` per the rule set's policy.
// Throws Error(kFormat, "headless chunk") if no token carries content.
std::size_t select_head(const Chunk& chunk, const ChunkRuleSet& rules);
// Same, using kLastContent for both kinds.
std::size_t select_head(const Chunk& chunk);

// Fills head_index and content_positions.
void finalize_chunk(Chunk& chunk, const ChunkRuleSet& rules);
void finalize_chunk(Chunk& chunk);

// Greedy left-to-right longest match of the rule patterns. Content tokens
// left uncovered become singleton noun chunks; other uncovered tokens stay
// outside any chunk.
Sentence chunk_sentence(Sentence sentence, const ChunkRuleSet& rules);
void chunk_text(Text& text, const ChunkRuleSet& rules);

}  // namespace chunkalign

#endif  // CHUNKALIGN_CHUNKER_H_
