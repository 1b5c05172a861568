#include <gtest/gtest.h>

#include "chunkalign/chunker.h"
#include "chunkalign/corpus.h"
#include "chunkalign/error.h"

namespace chunkalign {
namespace {

Sentence chunked(const std::string& line, const std::string& language) {
  const ChunkRuleSet rules = ChunkRuleSet::shipped(language);
  return chunk_sentence(make_sentence(line, 0, &rules), rules);
}

std::string bracketed(const std::string& line, const std::string& language = "en") {
  return to_bracket_notation(chunked(line, language));
}

std::vector<std::string> content_words(const Chunk& chunk) {
  std::vector<std::string> out;
  for (std::size_t p : chunk.content_positions) out.push_back(chunk.tokens[p].text);
  return out;
}

TEST(Chunker, EnglishSentenceGolden) {
  const std::string line = "The gigantic migratory fish has been sought out in Gujarat since ancient times for its liver oil.";
  const Sentence s = chunked(line, "en");
  EXPECT_EQ(to_bracket_notation(s),
            "[The gigantic migratory fish] ((has been sought out)) [in Gujarat] [since ancient times] "
            "[for its liver oil] .");
  std::size_t nouns = 0;
  std::size_t verbs = 0;
  for (const Chunk& c : s.chunks) (c.kind == ChunkKind::kNoun ? nouns : verbs)++;
  EXPECT_EQ(nouns, 4u);
  EXPECT_EQ(verbs, 1u);
  EXPECT_EQ(s.chunks[0].head().text, "fish");
  EXPECT_EQ(s.chunks[1].head().text, "sought");
  EXPECT_EQ(s.chunks[4].head().text, "oil");
}

TEST(Chunker, NounFragment) {
  const Sentence s = chunked("of the cast iron pump", "en");
  ASSERT_EQ(s.chunks.size(), 1u);
  EXPECT_EQ(s.chunks[0].kind, ChunkKind::kNoun);
  EXPECT_EQ(s.chunks[0].head().text, "pump");
  EXPECT_EQ(content_words(s.chunks[0]), (std::vector<std::string>{"cast", "iron", "pump"}));
}

TEST(Chunker, VerbFragment) {
  const Sentence s = chunked("would have been going fast", "en");
  ASSERT_EQ(s.chunks.size(), 1u);
  EXPECT_EQ(s.chunks[0].kind, ChunkKind::kVerb);
  EXPECT_EQ(s.chunks[0].head().text, "going");
  EXPECT_EQ(content_words(s.chunks[0]), (std::vector<std::string>{"going"}));
}

TEST(Chunker, ShortFragments) {
  EXPECT_EQ(bracketed("The red party"), "[The red party]");
  EXPECT_EQ(chunked("The red party", "en").chunks[0].head().text, "party");
  EXPECT_EQ(bracketed("is playing"), "((is playing))");
  EXPECT_EQ(chunked("is playing", "en").chunks[0].head().text, "playing");
}

TEST(Chunker, SingletonFallback) {
  const Sentence s = chunked("zyxxy", "en");
  ASSERT_EQ(s.chunks.size(), 1u);
  EXPECT_EQ(s.chunks[0].kind, ChunkKind::kNoun);
  EXPECT_EQ(to_bracket_notation(s), "[zyxxy]");
}

TEST(Chunker, HindiHeadExcludesPostposition) {
  const ChunkRuleSet rules = ChunkRuleSet::shipped("hi");
  const Sentence s = parse_prechunked_line("[इस विशालकाय प्रवासी मछलि के]", 0, 1, &rules);
  ASSERT_EQ(s.chunks.size(), 1u);
  EXPECT_EQ(s.chunks[0].head().text, "मछलि");
}

TEST(Chunker, HindiSentence) {
  const Sentence s = chunked("इस विशालकाय प्रवासी मछलि के जिगर के तेल के लिए गुजरात में", "hi");
  ASSERT_FALSE(s.chunks.empty());
  EXPECT_EQ(s.chunks[0].head().text, "मछलि");
  EXPECT_EQ(to_bracket_notation(s), "[इस विशालकाय प्रवासी मछलि के] [जिगर के] [तेल के लिए] [गुजरात में]");
}

TEST(Chunker, EveryContentTokenInExactlyOneChunk) {
  const Sentence s = chunked("The dog of the old man quickly ran to the big red house and barked at 3 cats.", "en");
  std::vector<int> owner(s.tokens.size(), 0);
  for (const Chunk& c : s.chunks) {
    for (std::size_t k = 0; k < c.tokens.size(); ++k) owner[c.first_token + k]++;
  }
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    EXPECT_LE(owner[i], 1);
    if (is_content_role(s.tokens[i].role)) EXPECT_EQ(owner[i], 1) << s.tokens[i].text;
  }
}

TEST(Chunker, Deterministic) {
  const std::string line = "The gigantic migratory fish has been sought out in Gujarat.";
  EXPECT_EQ(chunked(line, "en"), chunked(line, "en"));
}

TEST(RuleSet, ParsesCustomRules) {
  const ChunkRuleSet rules = ChunkRuleSet::parse(
      "language = xx\n"
      "[words]\n"
      "determiner = le la\n"
      "auxiliary = est\n"
      "[rules]\n"
      "noun = determiner content+\n"
      "verb = auxiliary content\n");
  EXPECT_EQ(rules.language(), "xx");
  const Sentence s = chunk_sentence(make_sentence("la maison est belle", 0, &rules), rules);
  EXPECT_EQ(to_bracket_notation(s), "[la maison] ((est belle))");
}

TEST(RuleSet, RejectsBadRules) {
  EXPECT_THROW(ChunkRuleSet::parse("[rules]\nnoun = content\n"), Error);  // no language
  EXPECT_THROW(ChunkRuleSet::parse("language = xx\n[rules]\nnoun = gadget+\n"), Error);
  EXPECT_THROW(ChunkRuleSet::parse("language = xx\n[words]\ndeterminer = a\nadverb = a\n"), Error);
  EXPECT_THROW(ChunkRuleSet::parse("language = xx\n[rules]\nnoun = (content\n"), Error);
}

TEST(RolePattern, QuantifiersAndAlternation) {
  ChunkRule rule;
  rule.pattern = parse_role_pattern("determiner? (content|numeral)+");
  const std::vector<Token> tokens = {{"the", TokenRole::kDeterminer},
                                     {"3", TokenRole::kNumeral},
                                     {"cats", TokenRole::kContent},
                                     {"ran", TokenRole::kAuxiliary}};
  EXPECT_EQ(longest_match(rule, tokens, 0), std::optional<std::size_t>(3));
  EXPECT_EQ(longest_match(rule, tokens, 1), std::optional<std::size_t>(3));
  EXPECT_EQ(longest_match(rule, tokens, 3), std::nullopt);
}

TEST(SelectHead, HeadlessChunkIsAnError) {
  Chunk c;
  c.tokens = {{"the", TokenRole::kDeterminer}};
  EXPECT_THROW(select_head(c), Error);
}

}  // namespace
}  // namespace chunkalign
