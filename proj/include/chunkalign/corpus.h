#ifndef CHUNKALIGN_CORPUS_H_
#define CHUNKALIGN_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chunkalign {

class ChunkRuleSet;

// Word classes assigned from the closed-class lists of a rule file.
// `content` is every word no list claims; `unknown` marks a token whose role
// has not been assigned yet.
enum class TokenRole {
  kContent,
  kAdposition,  // prepositions and postpositions
  kDeterminer,
  kAuxiliary,
  kNumeral,
  kAdverb,
  kParticle,
  kPronoun,
  kConjunction,
  kVerb,
  kPunctuation,
  kUnknown,
};

const char* role_name(TokenRole role);
std::optional<TokenRole> role_from_name(std::string_view name);

// Roles that carry lexical content and may serve as a chunk head.
bool is_content_role(TokenRole role);

struct Token {
  std::string text;
  TokenRole role = TokenRole::kUnknown;

  friend bool operator==(const Token&, const Token&) = default;
};

enum class ChunkKind { kNoun, kVerb };

struct Chunk {
  ChunkKind kind = ChunkKind::kNoun;
  // Offset of the first token inside the owning sentence.
  std::size_t first_token = 0;
  std::vector<Token> tokens;
  std::size_t head_index = 0;
  // Positions within `tokens` of the words used for matching; the head only
  // for verb chunks.
  std::vector<std::size_t> content_positions;

  const Token& head() const { return tokens.at(head_index); }

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;
  std::vector<Chunk> chunks;
  std::size_t char_length = 0;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Text {
  std::string language;
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }

  friend bool operator==(const Text&, const Text&) = default;
};

// Splits a line into tokens: whitespace separated, with leading and trailing
// punctuation runs detached as tokens of their own.
std::vector<Token> tokenize(std::string_view line);

// Builds a sentence from one line of text. Roles are assigned when `rules`
// is given and left as kUnknown otherwise.
Sentence make_sentence(std::string_view line, std::size_t index, const ChunkRuleSet* rules = nullptr);

// One sentence per non-blank line.
Text load_text(const std::filesystem::path& path, const std::string& language,
               const ChunkRuleSet* rules = nullptr);
Text text_from_lines(const std::vector<std::string>& lines, const std::string& language,
                     const ChunkRuleSet* rules = nullptr);

// Bracket notation: `[ ... ]` noun chunks, `(( ... ))` verb chunks. When
// `rules` is given, token roles, heads and content words are resolved with
// it; otherwise every token is treated as content.
Text parse_prechunked(const std::filesystem::path& path, const std::string& language,
                      const ChunkRuleSet* rules = nullptr);
Sentence parse_prechunked_line(std::string_view line, std::size_t index, std::size_t line_number,
                               const ChunkRuleSet* rules = nullptr);

std::string to_bracket_notation(const Sentence& sentence);
std::string to_bracket_notation(const Text& text);

// Word -> set of words, both sides normalized. Targets are kept sorted and
// unique.
class WordTable {
 public:
  void add(const std::string& key, const std::string& value);
  const std::vector<std::string>& lookup(const std::string& key) const;
  bool contains(const std::string& key, const std::string& value) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Entries sorted by key, for deterministic serialization.
  std::vector<std::pair<std::string, std::vector<std::string>>> sorted_entries() const;

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

struct BilingualLexicon {
  WordTable table;
};

struct SynonymTable {
  WordTable table;
};

WordTable parse_word_table(std::string_view content, const std::string& what);
BilingualLexicon load_lexicon(const std::filesystem::path& path);
// A missing file yields an empty table when `optional` is set.
SynonymTable load_synonyms(const std::filesystem::path& path, bool optional = false);

std::string serialize_word_table(const WordTable& table);

// Reads a whole file, validating UTF-8.
std::string read_file(const std::filesystem::path& path);
// Writes through a temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace chunkalign

#endif  // CHUNKALIGN_CORPUS_H_
