#include "chunkalign/corpus.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "chunkalign/chunker.h"
#include "chunkalign/error.h"
#include "chunkalign/matcher.h"
#include "chunkalign/unicode.h"

namespace chunkalign {

namespace {

constexpr std::array<std::pair<TokenRole, const char*>, 12> kRoleNames = {{
    {TokenRole::kContent, "content"},
    {TokenRole::kAdposition, "adposition"},
    {TokenRole::kDeterminer, "determiner"},
    {TokenRole::kAuxiliary, "auxiliary"},
    {TokenRole::kNumeral, "numeral"},
    {TokenRole::kAdverb, "adverb"},
    {TokenRole::kParticle, "particle"},
    {TokenRole::kPronoun, "pronoun"},
    {TokenRole::kConjunction, "conjunction"},
    {TokenRole::kVerb, "verb"},
    {TokenRole::kPunctuation, "punctuation"},
    {TokenRole::kUnknown, "unknown"},
}};

std::vector<std::string> split_lines(const std::string& content) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(content);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool is_blank(std::string_view line) {
  for (char32_t c : unicode::decode(line)) {
    if (!unicode::is_space(c)) return false;
  }
  return true;
}

TokenRole initial_role(const std::string& word, const ChunkRuleSet* rules) {
  return rules != nullptr ? rules->role_of(word) : shape_role(word);
}

void append_tokens(std::vector<Token>& out, std::u32string_view word, const ChunkRuleSet* rules) {
  for (Token& t : tokenize(unicode::encode(word))) {
    t.role = initial_role(t.text, rules);
    out.push_back(std::move(t));
  }
}

}  // namespace

const char* role_name(TokenRole role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "unknown";
}

std::optional<TokenRole> role_from_name(std::string_view name) {
  for (const auto& [r, n] : kRoleNames) {
    if (name == n) return r;
  }
  return std::nullopt;
}

bool is_content_role(TokenRole role) {
  return role == TokenRole::kContent || role == TokenRole::kVerb || role == TokenRole::kNumeral ||
         role == TokenRole::kUnknown;
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  for (const std::string& word : unicode::split_whitespace(line)) {
    const std::u32string cps = unicode::decode(word);
    std::size_t begin = 0;
    while (begin < cps.size() && unicode::is_punct(cps[begin])) ++begin;
    if (begin == cps.size()) {
      tokens.push_back(Token{word, TokenRole::kUnknown});
      continue;
    }
    std::size_t end = cps.size();
    while (end > begin && unicode::is_punct(cps[end - 1])) --end;
    const std::u32string_view view(cps);
    if (begin > 0) tokens.push_back(Token{unicode::encode(view.substr(0, begin)), TokenRole::kUnknown});
    tokens.push_back(Token{unicode::encode(view.substr(begin, end - begin)), TokenRole::kUnknown});
    if (end < cps.size()) tokens.push_back(Token{unicode::encode(view.substr(end)), TokenRole::kUnknown});
  }
  return tokens;
}

Sentence make_sentence(std::string_view line, std::size_t index, const ChunkRuleSet* rules) {
  Sentence sentence;
  sentence.index = index;
  sentence.tokens = tokenize(line);
  for (Token& t : sentence.tokens) t.role = initial_role(t.text, rules);
  sentence.char_length = unicode::count_non_space(line);
  return sentence;
}

Text text_from_lines(const std::vector<std::string>& lines, const std::string& language,
                     const ChunkRuleSet* rules) {
  Text text;
  text.language = language;
  for (const std::string& line : lines) {
    if (!unicode::is_valid_utf8(line)) throw Error(ErrorCode::kInvalidUtf8, "invalid UTF-8");
    if (is_blank(line)) continue;
    text.sentences.push_back(make_sentence(line, text.sentences.size(), rules));
  }
  if (text.sentences.empty()) throw Error(ErrorCode::kEmptyCorpus, "empty corpus");
  return text;
}

Text load_text(const std::filesystem::path& path, const std::string& language, const ChunkRuleSet* rules) {
  try {
    return text_from_lines(split_lines(read_file(path)), language, rules);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

Sentence parse_prechunked_line(std::string_view line, std::size_t index, std::size_t line_number,
                               const ChunkRuleSet* rules) {
  const auto fail = [&](const std::string& message) { return Error(ErrorCode::kFormat, message, line_number); };

  Sentence sentence;
  sentence.index = index;
  std::optional<Chunk> open;
  std::u32string word;

  const auto flush = [&] {
    if (word.empty()) return;
    const std::size_t before = sentence.tokens.size();
    append_tokens(sentence.tokens, word, rules);
    if (open) {
      open->tokens.insert(open->tokens.end(), sentence.tokens.begin() + static_cast<std::ptrdiff_t>(before),
                          sentence.tokens.end());
    }
    word.clear();
  };
  const auto open_chunk = [&](ChunkKind kind) {
    flush();
    if (open) throw fail("nested chunk");
    open = Chunk{};
    open->kind = kind;
    open->first_token = sentence.tokens.size();
  };
  const auto close_chunk = [&](ChunkKind kind) {
    flush();
    if (!open || open->kind != kind) throw fail(kind == ChunkKind::kNoun ? "unbalanced ']'" : "unbalanced '))'");
    if (open->tokens.empty()) throw fail("empty chunk");
    try {
      if (rules != nullptr) {
        finalize_chunk(*open, *rules);
      } else {
        finalize_chunk(*open);
      }
    } catch (const Error& e) {
      throw fail(e.what());
    }
    sentence.chunks.push_back(std::move(*open));
    open.reset();
  };

  const std::u32string cps = unicode::decode(line);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t c = cps[i];
    if (unicode::is_space(c)) {
      flush();
    } else if (c == U'[') {
      open_chunk(ChunkKind::kNoun);
    } else if (c == U']') {
      close_chunk(ChunkKind::kNoun);
    } else if (c == U'(' && i + 1 < cps.size() && cps[i + 1] == U'(') {
      open_chunk(ChunkKind::kVerb);
      ++i;
    } else if (c == U')' && i + 1 < cps.size() && cps[i + 1] == U')') {
      close_chunk(ChunkKind::kVerb);
      ++i;
    } else {
      word.push_back(c);
    }
  }
  flush();
  if (open) throw fail("unclosed chunk");
  for (const Token& t : sentence.tokens) sentence.char_length += unicode::count_non_space(t.text);
  return sentence;
}

Text parse_prechunked(const std::filesystem::path& path, const std::string& language, const ChunkRuleSet* rules) {
  const std::string content = read_file(path);
  Text text;
  text.language = language;
  std::size_t line_number = 0;
  for (const std::string& line : split_lines(content)) {
    ++line_number;
    if (is_blank(line)) continue;
    try {
      text.sentences.push_back(parse_prechunked_line(line, text.sentences.size(), line_number, rules));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ": " + e.what());
    }
  }
  if (text.sentences.empty()) throw Error(ErrorCode::kEmptyCorpus, path.string() + ": empty corpus");
  return text;
}

std::string to_bracket_notation(const Sentence& sentence) {
  std::string out;
  const auto emit = [&](const std::string& piece) {
    if (!out.empty()) out += ' ';
    out += piece;
  };
  std::size_t pos = 0;
  std::size_t next_chunk = 0;
  while (pos < sentence.tokens.size()) {
    if (next_chunk < sentence.chunks.size() && sentence.chunks[next_chunk].first_token == pos) {
      const Chunk& chunk = sentence.chunks[next_chunk++];
      std::string body;
      for (const Token& t : chunk.tokens) {
        if (!body.empty()) body += ' ';
        body += t.text;
      }
      emit(chunk.kind == ChunkKind::kNoun ? "[" + body + "]" : "((" + body + "))");
      pos += chunk.tokens.size();
    } else {
      emit(sentence.tokens[pos].text);
      ++pos;
    }
  }
  return out;
}

std::string to_bracket_notation(const Text& text) {
  std::string out;
  for (const Sentence& s : text.sentences) {
    out += to_bracket_notation(s);
    out += '\n';
  }
  return out;
}

void WordTable::add(const std::string& key, const std::string& value) {
  std::vector<std::string>& values = entries_[key];
  const auto it = std::lower_bound(values.begin(), values.end(), value);
  if (it == values.end() || *it != value) values.insert(it, value);
}

const std::vector<std::string>& WordTable::lookup(const std::string& key) const {
  static const std::vector<std::string> kEmpty;
  const auto it = entries_.find(key);
  return it == entries_.end() ? kEmpty : it->second;
}

bool WordTable::contains(const std::string& key, const std::string& value) const {
  const std::vector<std::string>& values = lookup(key);
  return std::binary_search(values.begin(), values.end(), value);
}

std::vector<std::pair<std::string, std::vector<std::string>>> WordTable::sorted_entries() const {
  std::vector<std::pair<std::string, std::vector<std::string>>> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end());
  return out;
}

WordTable parse_word_table(std::string_view content, const std::string& what) {
  WordTable table;
  std::size_t line_number = 0;
  for (const std::string& line : split_lines(std::string(content))) {
    ++line_number;
    if (is_blank(line) || line.front() == '#') continue;
    const auto fail = [&](const std::string& message) {
      return Error(ErrorCode::kFormat, what + ": " + message, line_number);
    };
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw fail("expected source<TAB>target");
    const std::string source = normalize(line.substr(0, tab));
    if (source.empty()) throw fail("empty source word");
    const std::string rest = line.substr(tab + 1);
    std::size_t begin = 0;
    bool any = false;
    while (begin <= rest.size()) {
      std::size_t bar = rest.find('|', begin);
      if (bar == std::string::npos) bar = rest.size();
      const std::string target = normalize(rest.substr(begin, bar - begin));
      if (target.empty()) throw fail("empty target alternative");
      table.add(source, target);
      any = true;
      begin = bar + 1;
    }
    if (!any) throw fail("no targets");
  }
  return table;
}

BilingualLexicon load_lexicon(const std::filesystem::path& path) {
  return BilingualLexicon{parse_word_table(read_file(path), path.string())};
}

SynonymTable load_synonyms(const std::filesystem::path& path, bool optional) {
  if (optional && !std::filesystem::exists(path)) return SynonymTable{};
  return SynonymTable{parse_word_table(read_file(path), path.string())};
}

std::string serialize_word_table(const WordTable& table) {
  std::string out;
  for (const auto& [key, values] : table.sorted_entries()) {
    out += key;
    out += '\t';
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out += '|';
      out += values[i];
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::string content = buffer.str();
  if (!unicode::is_valid_utf8(content)) throw Error(ErrorCode::kInvalidUtf8, path.string() + ": invalid UTF-8");
  return content;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot write " + path.string());
  }
}

}  // namespace chunkalign
