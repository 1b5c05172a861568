#ifndef CHUNKALIGN_SYNCORPUS_H_
#define CHUNKALIGN_SYNCORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "chunkalign/alignment.h"
#include "chunkalign/corpus.h"

namespace chunkalign {

// Synthetic English-like source and Hindi-like target texts with a known
// gold alignment.
struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t texts = 10;
  std::size_t sentences_mean = 21;
  std::size_t min_chunks = 4;
  std::size_t max_chunks = 9;
  double coverage = 1.0;       // fraction of true word pairs in the emitted lexicon
  double deletion_rate = 0.0;  // source sentence without a translation
  double merge_rate = 0.0;     // two source sentences translated as one
  bool reorder = true;         // shuffle chunks inside each target sentence
  std::size_t leading_deletions = 0;
  std::size_t noun_vocabulary = 1500;
  std::size_t adjective_vocabulary = 400;
  std::size_t verb_vocabulary = 400;

  void validate() const;
};

struct GeneratedText {
  std::string id;
  std::vector<std::string> source_lines;
  std::vector<std::string> target_lines;
  Alignment gold;
};

struct GeneratedCorpus {
  std::vector<GeneratedText> texts;
  WordTable lexicon;       // coverage-limited
  WordTable full_lexicon;  // every true pair
};

// Deterministic for a given config. Texts do not depend on `coverage`, and
// the lexicon for a lower coverage is a subset of the one for a higher
// coverage under the same seed.
GeneratedCorpus generate(const GenConfig& cfg);

// Layout: src/<id>.txt, tgt/<id>.txt, gold/<id>.tsv, lexicon.tsv,
// lexicon.full.tsv.
void write_corpus(const GeneratedCorpus& corpus, const std::filesystem::path& dir);

}  // namespace chunkalign

#endif  // CHUNKALIGN_SYNCORPUS_H_
