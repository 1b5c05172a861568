#ifndef CHUNKALIGN_PIPELINE_H_
#define CHUNKALIGN_PIPELINE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "chunkalign/aligner.h"
#include "chunkalign/alignment.h"
#include "chunkalign/chunker.h"
#include "chunkalign/corpus.h"
#include "chunkalign/many_many.h"
#include "chunkalign/matcher.h"

namespace chunkalign {

// Everything the lexical aligner reads besides the texts themselves.
struct Resources {
  ChunkRuleSet source_rules = ChunkRuleSet::shipped("en");
  ChunkRuleSet target_rules = ChunkRuleSet::shipped("hi");
  BilingualLexicon lexicon;
  SynonymTable synonyms;
  TransliterationTable translit = TransliterationTable::shipped();
};

struct PipelineConfig {
  AlignerConfig aligner;
  bool many_many = false;
  ExtensionConfig extension;
};

// Reads a plain text and chunks it, or reads a bracketed pre-chunked file.
Text load_chunked_text(const std::filesystem::path& path, const ChunkRuleSet& rules, bool prechunked);
Text chunked_text_from_lines(const std::vector<std::string>& lines, const ChunkRuleSet& rules);

class LexicalAligner {
 public:
  LexicalAligner(const Resources& resources, PipelineConfig config);

  // Candidates, greedy one-one pass, then the optional many-many extension.
  Alignment align(const Text& source, const Text& target) const;
  const Matcher& matcher() const { return matcher_; }

 private:
  const Resources& resources_;
  PipelineConfig config_;
  Matcher matcher_;
};

}  // namespace chunkalign

#endif  // CHUNKALIGN_PIPELINE_H_
