#ifndef CHUNKALIGN_MATCHER_H_
#define CHUNKALIGN_MATCHER_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chunkalign/corpus.h"

namespace chunkalign {

// How a source and a target word were found to correspond, in precedence
// order.
enum class MatchKind { kLexicon, kSynonymFallback, kNumeric, kPhonetic, kNone };

const char* match_kind_name(MatchKind kind);

// NFC, lowercase, leading and trailing punctuation stripped. A word made of
// punctuation normalizes to "".
std::string normalize(std::string_view word, std::string_view language = {});

// Canonical decimal form of a number written in ASCII or Devanagari digits
// ("१,९९१" -> "1991", "007.50" -> "7.5"); nullopt if `word` is not a number.
std::optional<std::string> canonical_number(std::string_view word);

// Grapheme -> Latin phonetic unit table, matched longest-grapheme first.
class TransliterationTable {
 public:
  // `grapheme<TAB>latin` lines; an empty latin side drops the grapheme.
  static TransliterationTable parse(std::string_view content);
  static TransliterationTable load(const std::filesystem::path& path);
  // Devanagari table compiled into the library.
  static TransliterationTable shipped();

  // Latin rendering of `word`. ASCII passes through unchanged; code points
  // the table does not cover are dropped and appended to `dropped`.
  std::string transliterate(std::u32string_view word, std::vector<char32_t>* dropped = nullptr) const;

  bool covers(char32_t c) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::u32string, std::string> entries_;
  std::size_t longest_ = 0;
};

// Consonant skeleton: transliterate, uppercase, drop vowels (and the silent
// letters H, W, Y) except at the start of the word, collapse runs of the same
// letter.
std::string phonetic_key(std::string_view word, const TransliterationTable& table,
                         std::vector<char32_t>* dropped = nullptr);

// Equal non-empty keys, or keys of length >= 4 within edit distance 1.
bool phonetic_keys_match(std::string_view a, std::string_view b);

std::size_t edit_distance(std::string_view a, std::string_view b);

// Per-word data precomputed once so that chunk comparison stays cheap.
struct WordFeatures {
  std::string text;
  std::vector<std::string> stems;  // suffix-stripped variants
  std::optional<std::string> number;
  std::string phonetic;
};

struct PreparedChunk {
  ChunkKind kind = ChunkKind::kNoun;
  std::size_t head = 0;  // index into words
  std::vector<WordFeatures> words;
};

struct PreparedSentence {
  std::vector<PreparedChunk> chunks;
};

// Lexicon, target-side synonyms, transliteration and per-side stemming
// suffixes. Holds references: the resources must outlive the matcher.
class Matcher {
 public:
  Matcher(const BilingualLexicon& lexicon, const SynonymTable& synonyms, const TransliterationTable& translit,
          std::vector<std::string> source_suffixes = {}, std::vector<std::string> target_suffixes = {});

  WordFeatures source_features(std::string_view normalized) const;
  WordFeatures target_features(std::string_view normalized) const;

  MatchKind match(const WordFeatures& src, const WordFeatures& tgt) const;
  // Convenience overload on normalized words.
  MatchKind match_words(std::string_view src, std::string_view tgt) const;

  PreparedChunk prepare_source(const Chunk& chunk) const;
  PreparedChunk prepare_target(const Chunk& chunk) const;
  PreparedSentence prepare_source(const Sentence& sentence) const;
  PreparedSentence prepare_target(const Sentence& sentence) const;

  // Heads match, or both chunks have at least two content words and at least
  // half (rounded up) of the source words each match a distinct target word.
  bool match_chunks(const PreparedChunk& src, const PreparedChunk& tgt) const;
  bool match_chunks(const Chunk& src, const Chunk& tgt) const;

 private:
  WordFeatures features(std::string_view normalized, const std::vector<std::string>& suffixes) const;
  PreparedChunk prepare(const Chunk& chunk, const std::vector<std::string>& suffixes) const;
  bool lexicon_match(const WordFeatures& src, const WordFeatures& tgt) const;
  bool synonym_match(const WordFeatures& src, const WordFeatures& tgt) const;

  const BilingualLexicon& lexicon_;
  const SynonymTable& synonyms_;
  const TransliterationTable& translit_;
  std::vector<std::string> source_suffixes_;
  std::vector<std::string> target_suffixes_;
};

// Free-function form of the word matcher.
MatchKind match_words(std::string_view src, std::string_view tgt, const BilingualLexicon& lexicon,
                      const SynonymTable& synonyms, const TransliterationTable& translit);

}  // namespace chunkalign

#endif  // CHUNKALIGN_MATCHER_H_
