#include "chunkalign/syncorpus.h"

#include <array>
#include <cstdio>
#include <random>
#include <set>
#include <string_view>

#include "chunkalign/chunker.h"
#include "chunkalign/error.h"

namespace chunkalign {

namespace {

// Integer-only sampling on top of mt19937_64, so output does not depend on
// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<std::size_t>(x % bound);
  }

  // Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <typename T, std::size_t N>
  const T& pick(const std::array<T, N>& items) {
    return items[below(N)];
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::array<std::string_view, 12> kLatinConsonants = {"b", "d", "f", "g", "k", "l",
                                                              "m", "n", "p", "r", "s", "t"};
constexpr std::array<std::string_view, 5> kLatinVowels = {"a", "e", "i", "o", "u"};
constexpr std::array<std::string_view, 7> kDevanagariConsonants = {"च", "छ", "ज", "झ", "व", "य", "ह"};
constexpr std::array<std::string_view, 8> kMatras = {"", "ा", "ि", "ी", "ु", "ू", "े", "ो"};

constexpr std::array<std::string_view, 15> kEnAdpositions = {"of",   "in",   "on",   "at",    "for",
                                                            "from", "with", "by",   "into",  "about",
                                                            "over", "under", "after", "before", "through"};
constexpr std::array<std::string_view, 9> kEnDeterminers = {"the", "a",    "this", "that", "its",
                                                           "their", "some", "every", "each"};
constexpr std::array<std::string_view, 10> kEnAuxiliaries = {"has",  "have", "had", "is",  "was",
                                                            "will", "can",  "may", "must", "did"};
constexpr std::array<std::string_view, 3> kEnSecondAuxiliaries = {"been", "be", "being"};
constexpr std::array<std::string_view, 5> kEnAdverbs = {"quickly", "slowly", "again", "often", "soon"};
constexpr std::array<std::string_view, 9> kHiPostpositions = {"में", "से", "का", "के", "की", "को", "पर", "ने", "तक"};
constexpr std::array<std::string_view, 4> kHiDeterminers = {"इस", "उस", "यह", "वह"};
constexpr std::array<std::string_view, 6> kHiAuxiliaries = {"है", "था", "गया", "रहा", "सकता", "हुआ"};
constexpr std::array<std::string_view, 3> kHiAdverbs = {"बहुत", "फिर", "अब"};

struct WordPair {
  std::string source;
  std::string target;
};

struct Vocabulary {
  std::vector<WordPair> nouns;
  std::vector<WordPair> adjectives;
  std::vector<WordPair> verbs;
};

std::string latin_word(Rng& rng) {
  std::string w;
  const std::size_t syllables = rng.between(2, 3);
  for (std::size_t i = 0; i < syllables; ++i) {
    w += rng.pick(kLatinConsonants);
    w += rng.pick(kLatinVowels);
  }
  return w;
}

std::string devanagari_word(Rng& rng) {
  std::string w;
  const std::size_t syllables = rng.between(2, 3);
  for (std::size_t i = 0; i < syllables; ++i) {
    w += rng.pick(kDevanagariConsonants);
    // A final "े" would look like an inflection to the Hindi stemmer.
    std::string_view matra = rng.pick(kMatras);
    while (i + 1 == syllables && matra == "े") matra = rng.pick(kMatras);
    w += matra;
  }
  return w;
}

Vocabulary make_vocabulary(const GenConfig& cfg, Rng& rng) {
  const ChunkRuleSet en = ChunkRuleSet::shipped("en");
  const ChunkRuleSet hi = ChunkRuleSet::shipped("hi");
  std::set<std::string> used_source;
  std::set<std::string> used_target;
  const auto draw = [&](std::size_t count) {
    std::vector<WordPair> out;
    while (out.size() < count) {
      std::string s = latin_word(rng);
      std::string t = devanagari_word(rng);
      if (en.role_of(s) != TokenRole::kContent || hi.role_of(t) != TokenRole::kContent) continue;
      if (used_source.contains(s) || used_target.contains(t)) continue;
      used_source.insert(s);
      used_target.insert(t);
      out.push_back({std::move(s), std::move(t)});
    }
    return out;
  };
  Vocabulary vocab;
  vocab.nouns = draw(cfg.noun_vocabulary);
  vocab.adjectives = draw(cfg.adjective_vocabulary);
  vocab.verbs = draw(cfg.verb_vocabulary);
  return vocab;
}

struct ChunkPair {
  std::string source;
  std::string target;
};

ChunkPair noun_chunk(const Vocabulary& vocab, Rng& rng) {
  std::vector<std::string> src;
  std::vector<std::string> tgt;
  // A leading function word keeps adjacent noun chunks apart.
  const bool adposition = rng.chance(0.5);
  if (adposition) src.emplace_back(rng.pick(kEnAdpositions));
  if (!adposition || rng.chance(0.6)) src.emplace_back(rng.pick(kEnDeterminers));
  if (rng.chance(0.2)) tgt.emplace_back(rng.pick(kHiDeterminers));
  const double u = rng.unit();
  const std::size_t adjectives = u < 0.5 ? 0 : (u < 0.85 ? 1 : 2);
  for (std::size_t i = 0; i < adjectives; ++i) {
    const WordPair& adj = vocab.adjectives[rng.below(vocab.adjectives.size())];
    src.push_back(adj.source);
    tgt.push_back(adj.target);
  }
  const WordPair& noun = vocab.nouns[rng.below(vocab.nouns.size())];
  src.push_back(noun.source);
  tgt.push_back(noun.target);
  tgt.emplace_back(rng.pick(kHiPostpositions));
  ChunkPair out;
  for (const std::string& w : src) out.source += (out.source.empty() ? "" : " ") + w;
  for (const std::string& w : tgt) out.target += (out.target.empty() ? "" : " ") + w;
  return out;
}

ChunkPair verb_chunk(const Vocabulary& vocab, Rng& rng) {
  const WordPair& verb = vocab.verbs[rng.below(vocab.verbs.size())];
  ChunkPair out;
  out.source = std::string(rng.pick(kEnAuxiliaries));
  if (rng.chance(0.4)) out.source += " " + std::string(rng.pick(kEnSecondAuxiliaries));
  out.source += " " + verb.source;
  const bool adverb = rng.chance(0.3);
  if (adverb) {
    out.source += " " + std::string(rng.pick(kEnAdverbs));
    out.target = std::string(rng.pick(kHiAdverbs)) + " ";
  }
  out.target += verb.target + " " + std::string(rng.pick(kHiAuxiliaries));
  if (rng.chance(0.5)) out.target += " " + std::string(rng.pick(kHiAuxiliaries));
  return out;
}

std::vector<ChunkPair> sentence_chunks(const GenConfig& cfg, const Vocabulary& vocab, Rng& rng) {
  const std::size_t count = rng.between(cfg.min_chunks, cfg.max_chunks);
  const std::size_t verb_at = rng.below(count);
  std::vector<ChunkPair> chunks;
  for (std::size_t i = 0; i < count; ++i) {
    chunks.push_back(i == verb_at ? verb_chunk(vocab, rng) : noun_chunk(vocab, rng));
  }
  return chunks;
}

std::string join_source(const std::vector<ChunkPair>& chunks) {
  std::string out;
  for (const ChunkPair& c : chunks) out += (out.empty() ? "" : " ") + c.source;
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out + ".";
}

std::string join_target(std::vector<const ChunkPair*> chunks, bool reorder, Rng& rng) {
  if (reorder) rng.shuffle(chunks);
  std::string out;
  for (const ChunkPair* c : chunks) out += (out.empty() ? "" : " ") + c->target;
  return out + "।";
}

GeneratedText generate_text(const GenConfig& cfg, const Vocabulary& vocab, std::size_t index, Rng& rng) {
  GeneratedText text;
  char id[32];
  std::snprintf(id, sizeof(id), "t%03zu", index);
  text.id = id;

  const std::size_t spread = cfg.sentences_mean / 4;
  const std::size_t count =
      std::max<std::size_t>(1, rng.between(cfg.sentences_mean - spread, cfg.sentences_mean + spread));
  std::vector<std::vector<ChunkPair>> sentences;
  for (std::size_t i = 0; i < count; ++i) {
    sentences.push_back(sentence_chunks(cfg, vocab, rng));
    text.source_lines.push_back(join_source(sentences.back()));
  }

  Alignment& gold = text.gold;
  gold.source_count = count;
  const auto emit = [&](std::vector<std::size_t> src, std::vector<const ChunkPair*> first,
                        std::vector<const ChunkPair*> second) {
    std::string line = join_target(std::move(first), cfg.reorder, rng);
    if (!second.empty()) {
      line.erase(line.size() - std::string_view("।").size());
      line += " " + join_target(std::move(second), cfg.reorder, rng);
    }
    gold.groups.push_back(AlignedGroup{std::move(src), {text.target_lines.size()}, 1.0});
    text.target_lines.push_back(std::move(line));
  };
  const auto pointers = [](const std::vector<ChunkPair>& chunks) {
    std::vector<const ChunkPair*> out;
    for (const ChunkPair& c : chunks) out.push_back(&c);
    return out;
  };

  std::size_t i = 0;
  for (; i < count && i < cfg.leading_deletions; ++i) gold.groups.push_back(AlignedGroup{{i}, {}, 1.0});
  while (i < count) {
    if (i + 1 < count && rng.chance(cfg.merge_rate)) {
      emit({i, i + 1}, pointers(sentences[i]), pointers(sentences[i + 1]));
      i += 2;
    } else if (rng.chance(cfg.deletion_rate)) {
      gold.groups.push_back(AlignedGroup{{i}, {}, 1.0});
      ++i;
    } else {
      emit({i}, pointers(sentences[i]), {});
      ++i;
    }
  }
  if (text.target_lines.empty()) {
    // Keep at least one translated sentence.
    const std::size_t last = count - 1;
    gold.groups.pop_back();
    emit({last}, pointers(sentences[last]), {});
  }
  gold.target_count = text.target_lines.size();
  gold.complete();
  return text;
}

void check_rate(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

void GenConfig::validate() const {
  check_rate(coverage, "coverage");
  check_rate(deletion_rate, "deletion rate");
  check_rate(merge_rate, "merge rate");
  if (sentences_mean == 0) throw Error(ErrorCode::kInvalidArgument, "sentences per text must be positive");
  if (min_chunks == 0 || min_chunks > max_chunks) {
    throw Error(ErrorCode::kInvalidArgument, "chunk range must satisfy 1 <= min <= max");
  }
  if (noun_vocabulary == 0 || adjective_vocabulary == 0 || verb_vocabulary == 0) {
    throw Error(ErrorCode::kInvalidArgument, "vocabulary sizes must be positive");
  }
}

GeneratedCorpus generate(const GenConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const Vocabulary vocab = make_vocabulary(cfg, rng);

  GeneratedCorpus corpus;
  Rng coverage_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  for (const auto* list : {&vocab.nouns, &vocab.adjectives, &vocab.verbs}) {
    for (const WordPair& p : *list) {
      corpus.full_lexicon.add(p.source, p.target);
      if (coverage_rng.unit() < cfg.coverage) corpus.lexicon.add(p.source, p.target);
    }
  }
  for (std::size_t t = 0; t < cfg.texts; ++t) corpus.texts.push_back(generate_text(cfg, vocab, t, rng));
  return corpus;
}

void write_corpus(const GeneratedCorpus& corpus, const std::filesystem::path& dir) {
  const auto lines = [](const std::vector<std::string>& v) {
    std::string out;
    for (const std::string& l : v) out += l + "\n";
    return out;
  };
  for (const char* sub : {"src", "tgt", "gold"}) {
    std::error_code ec;
    std::filesystem::create_directories(dir / sub, ec);
    if (ec) throw Error(ErrorCode::kIo, (dir / sub).string() + ": " + ec.message());
  }
  for (const GeneratedText& text : corpus.texts) {
    write_file_atomic(dir / "src" / (text.id + ".txt"), lines(text.source_lines));
    write_file_atomic(dir / "tgt" / (text.id + ".txt"), lines(text.target_lines));
    write_file_atomic(dir / "gold" / (text.id + ".tsv"), to_tsv(text.gold));
  }
  write_file_atomic(dir / "lexicon.tsv", serialize_word_table(corpus.lexicon));
  write_file_atomic(dir / "lexicon.full.tsv", serialize_word_table(corpus.full_lexicon));
}

}  // namespace chunkalign
