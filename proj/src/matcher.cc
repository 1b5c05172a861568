#include "chunkalign/matcher.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "chunkalign/error.h"
#include "chunkalign/shipped_resources.h"
#include "chunkalign/unicode.h"

namespace chunkalign {

namespace {

bool is_vowel_or_silent(char c) {
  switch (c) {
    case 'A': case 'E': case 'I': case 'O': case 'U':
    case 'H': case 'W': case 'Y':
      return true;
    default:
      return false;
  }
}

std::size_t code_points(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace

const char* match_kind_name(MatchKind kind) {
  switch (kind) {
    case MatchKind::kLexicon: return "lexicon";
    case MatchKind::kSynonymFallback: return "synonym_fallback";
    case MatchKind::kNumeric: return "numeric";
    case MatchKind::kPhonetic: return "phonetic";
    case MatchKind::kNone: return "none";
  }
  return "none";
}

std::string normalize(std::string_view word, std::string_view /*language*/) {
  const std::u32string cps = unicode::decode(unicode::nfc_lower(word));
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && unicode::is_punct(cps[begin])) ++begin;
  while (end > begin && unicode::is_punct(cps[end - 1])) --end;
  return unicode::encode(std::u32string_view(cps).substr(begin, end - begin));
}

std::optional<std::string> canonical_number(std::string_view word) {
  std::string ascii;
  for (char32_t c : unicode::decode(word)) {
    if (c >= U'0' && c <= U'9') {
      ascii.push_back(static_cast<char>(c));
    } else if (c >= 0x0966 && c <= 0x096F) {
      ascii.push_back(static_cast<char>('0' + (c - 0x0966)));
    } else if (c == U',' || c == U'.') {
      ascii.push_back(static_cast<char>(c));
    } else {
      return std::nullopt;
    }
  }
  if (ascii.empty() || !std::isdigit(static_cast<unsigned char>(ascii.front())) ||
      !std::isdigit(static_cast<unsigned char>(ascii.back()))) {
    return std::nullopt;
  }
  std::string integer;
  std::string fraction;
  bool in_fraction = false;
  for (std::size_t i = 0; i < ascii.size(); ++i) {
    const char c = ascii[i];
    if (c == '.') {
      if (in_fraction) return std::nullopt;
      in_fraction = true;
    } else if (c == ',') {
      // Grouping separator: only between digits of the integer part.
      if (in_fraction || !std::isdigit(static_cast<unsigned char>(ascii[i - 1])) ||
          !std::isdigit(static_cast<unsigned char>(ascii[i + 1]))) {
        return std::nullopt;
      }
    } else {
      (in_fraction ? fraction : integer).push_back(c);
    }
  }
  const std::size_t nz = integer.find_first_not_of('0');
  integer = nz == std::string::npos ? "0" : integer.substr(nz);
  while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
  return fraction.empty() ? integer : integer + "." + fraction;
}

TransliterationTable TransliterationTable::parse(std::string_view content) {
  TransliterationTable table;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(ErrorCode::kFormat, "transliteration: expected grapheme<TAB>latin", line_number);
    }
    const std::u32string grapheme = unicode::decode(unicode::nfc(line.substr(0, tab)));
    std::string latin = line.substr(tab + 1);
    for (char c : latin) {
      if (static_cast<unsigned char>(c) >= 0x80) {
        throw Error(ErrorCode::kFormat, "transliteration: latin side must be ASCII", line_number);
      }
    }
    table.longest_ = std::max(table.longest_, grapheme.size());
    table.entries_[grapheme] = std::move(latin);
  }
  return table;
}

TransliterationTable TransliterationTable::load(const std::filesystem::path& path) {
  try {
    return parse(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

TransliterationTable TransliterationTable::shipped() { return parse(shipped::hindi_transliteration()); }

bool TransliterationTable::covers(char32_t c) const { return c < 0x80 || entries_.count(std::u32string(1, c)) > 0; }

std::string TransliterationTable::transliterate(std::u32string_view word, std::vector<char32_t>* dropped) const {
  std::string out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    bool found = false;
    for (std::size_t len = std::min(longest_, word.size() - pos); len > 0; --len) {
      const auto it = entries_.find(std::u32string(word.substr(pos, len)));
      if (it != entries_.end()) {
        out += it->second;
        pos += len;
        found = true;
        break;
      }
    }
    if (found) continue;
    if (word[pos] < 0x80) {
      out.push_back(static_cast<char>(word[pos]));
    } else if (dropped != nullptr) {
      dropped->push_back(word[pos]);
    }
    ++pos;
  }
  return out;
}

std::string phonetic_key(std::string_view word, const TransliterationTable& table, std::vector<char32_t>* dropped) {
  const std::string latin = table.transliterate(unicode::decode(unicode::nfc(word)), dropped);
  std::string letters;
  for (char c : latin) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (std::isalpha(u)) {
      letters.push_back(static_cast<char>(std::toupper(u)));
    } else if (std::isdigit(u)) {
      letters.push_back(c);
    }
  }
  std::string key;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char c = letters[i];
    if (i == 0) {
      key.push_back(c);
      continue;
    }
    if (is_vowel_or_silent(c)) continue;
    if (key.back() != c) key.push_back(c);
  }
  return key;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = up;
    }
  }
  return row[b.size()];
}

bool phonetic_keys_match(std::string_view a, std::string_view b) {
  if (a.empty() || b.empty()) return false;
  if (a == b) return true;
  if (a.size() < 4 || b.size() < 4) return false;
  const std::size_t diff = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  return diff <= 1 && edit_distance(a, b) <= 1;
}

Matcher::Matcher(const BilingualLexicon& lexicon, const SynonymTable& synonyms, const TransliterationTable& translit,
                 std::vector<std::string> source_suffixes, std::vector<std::string> target_suffixes)
    : lexicon_(lexicon),
      synonyms_(synonyms),
      translit_(translit),
      source_suffixes_(std::move(source_suffixes)),
      target_suffixes_(std::move(target_suffixes)) {}

WordFeatures Matcher::features(std::string_view normalized, const std::vector<std::string>& suffixes) const {
  WordFeatures f;
  f.text = std::string(normalized);
  for (const std::string& suffix : suffixes) {
    if (f.text.size() > suffix.size() && f.text.ends_with(suffix) &&
        code_points(f.text) >= code_points(suffix) + 2) {
      std::string stem = f.text.substr(0, f.text.size() - suffix.size());
      if (std::find(f.stems.begin(), f.stems.end(), stem) == f.stems.end()) f.stems.push_back(std::move(stem));
    }
  }
  f.number = canonical_number(f.text);
  f.phonetic = phonetic_key(f.text, translit_);
  return f;
}

WordFeatures Matcher::source_features(std::string_view normalized) const {
  return features(normalized, source_suffixes_);
}

WordFeatures Matcher::target_features(std::string_view normalized) const {
  return features(normalized, target_suffixes_);
}

bool Matcher::lexicon_match(const WordFeatures& src, const WordFeatures& tgt) const {
  const WordTable& lex = lexicon_.table;
  if (lex.contains(src.text, tgt.text)) return true;
  if (src.stems.empty() && tgt.stems.empty()) return false;
  // One retry over the stemmed variants.
  const auto try_target = [&](const std::string& s) {
    if (lex.lookup(s).empty()) return false;
    if (&s != &src.text && lex.contains(s, tgt.text)) return true;
    for (const std::string& t : tgt.stems) {
      if (lex.contains(s, t)) return true;
    }
    return false;
  };
  if (try_target(src.text)) return true;
  for (const std::string& s : src.stems) {
    if (try_target(s)) return true;
  }
  return false;
}

bool Matcher::synonym_match(const WordFeatures& src, const WordFeatures& tgt) const {
  if (synonyms_.table.empty()) return false;
  const auto check = [&](const std::string& t) {
    for (const std::string& synonym : synonyms_.table.lookup(t)) {
      if (lexicon_.table.contains(src.text, synonym)) return true;
      for (const std::string& s : src.stems) {
        if (lexicon_.table.contains(s, synonym)) return true;
      }
    }
    return false;
  };
  if (check(tgt.text)) return true;
  for (const std::string& t : tgt.stems) {
    if (check(t)) return true;
  }
  return false;
}

MatchKind Matcher::match(const WordFeatures& src, const WordFeatures& tgt) const {
  if (src.text.empty() || tgt.text.empty()) return MatchKind::kNone;
  if (lexicon_match(src, tgt)) return MatchKind::kLexicon;
  if (synonym_match(src, tgt)) return MatchKind::kSynonymFallback;
  if (src.number && tgt.number && *src.number == *tgt.number) return MatchKind::kNumeric;
  if (phonetic_keys_match(src.phonetic, tgt.phonetic)) return MatchKind::kPhonetic;
  return MatchKind::kNone;
}

MatchKind Matcher::match_words(std::string_view src, std::string_view tgt) const {
  return match(source_features(src), target_features(tgt));
}

PreparedChunk Matcher::prepare(const Chunk& chunk, const std::vector<std::string>& suffixes) const {
  PreparedChunk out;
  out.kind = chunk.kind;
  for (std::size_t i = 0; i < chunk.content_positions.size(); ++i) {
    const std::size_t pos = chunk.content_positions[i];
    if (pos == chunk.head_index) out.head = i;
    out.words.push_back(features(normalize(chunk.tokens.at(pos).text), suffixes));
  }
  return out;
}

PreparedChunk Matcher::prepare_source(const Chunk& chunk) const { return prepare(chunk, source_suffixes_); }
PreparedChunk Matcher::prepare_target(const Chunk& chunk) const { return prepare(chunk, target_suffixes_); }

PreparedSentence Matcher::prepare_source(const Sentence& sentence) const {
  PreparedSentence out;
  for (const Chunk& c : sentence.chunks) out.chunks.push_back(prepare_source(c));
  return out;
}

PreparedSentence Matcher::prepare_target(const Sentence& sentence) const {
  PreparedSentence out;
  for (const Chunk& c : sentence.chunks) out.chunks.push_back(prepare_target(c));
  return out;
}

bool Matcher::match_chunks(const PreparedChunk& src, const PreparedChunk& tgt) const {
  if (src.words.empty() || tgt.words.empty()) return false;
  if (match(src.words[src.head], tgt.words[tgt.head]) != MatchKind::kNone) return true;
  if (src.words.size() < 2 || tgt.words.size() < 2) return false;
  const std::size_t needed = (src.words.size() + 1) / 2;
  std::vector<bool> used(tgt.words.size(), false);
  std::size_t matched = 0;
  for (const WordFeatures& s : src.words) {
    for (std::size_t j = 0; j < tgt.words.size(); ++j) {
      if (!used[j] && match(s, tgt.words[j]) != MatchKind::kNone) {
        used[j] = true;
        ++matched;
        break;
      }
    }
    if (matched >= needed) return true;
  }
  return false;
}

bool Matcher::match_chunks(const Chunk& src, const Chunk& tgt) const {
  return match_chunks(prepare_source(src), prepare_target(tgt));
}

MatchKind match_words(std::string_view src, std::string_view tgt, const BilingualLexicon& lexicon,
                      const SynonymTable& synonyms, const TransliterationTable& translit) {
  return Matcher(lexicon, synonyms, translit).match_words(src, tgt);
}

}  // namespace chunkalign
