#include "chunkalign/pipeline.h"

namespace chunkalign {

Text load_chunked_text(const std::filesystem::path& path, const ChunkRuleSet& rules, bool prechunked) {
  if (prechunked) return parse_prechunked(path, rules.language(), &rules);
  Text text = load_text(path, rules.language(), &rules);
  chunk_text(text, rules);
  return text;
}

Text chunked_text_from_lines(const std::vector<std::string>& lines, const ChunkRuleSet& rules) {
  Text text = text_from_lines(lines, rules.language(), &rules);
  chunk_text(text, rules);
  return text;
}

LexicalAligner::LexicalAligner(const Resources& resources, PipelineConfig config)
    : resources_(resources),
      config_(std::move(config)),
      matcher_(resources.lexicon, resources.synonyms, resources.translit, resources.source_rules.suffixes(),
               resources.target_rules.suffixes()) {
  config_.aligner.validate();
  if (config_.many_many) config_.extension.validate();
}

Alignment LexicalAligner::align(const Text& source, const Text& target) const {
  const std::vector<CandidatePair> candidates = build_candidates(source, target, config_.aligner, matcher_);
  Alignment alignment = align_one_one(candidates, source.size(), target.size(), config_.aligner.threshold);
  if (config_.many_many) {
    alignment = extend_many_many(alignment, source, target, candidates, config_.aligner.threshold, config_.extension);
  }
  return alignment;
}

}  // namespace chunkalign
