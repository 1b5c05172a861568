#include <gtest/gtest.h>

#include "chunkalign/alignment.h"
#include "chunkalign/error.h"

namespace chunkalign {
namespace {

TEST(Alignment, CompleteOrdersGroupsAndAddsDeletions) {
  Alignment a;
  a.source_count = 4;
  a.target_count = 4;
  a.groups = {{{3}, {3}, 0.5}, {{0}, {1}, 0.5}};
  a.complete();
  EXPECT_EQ(to_tsv(a),
            "-\t0\t0.0000\tdel-tgt\n"
            "0\t1\t0.5000\t1-1\n"
            "1\t-\t0.0000\tdel-src\n"
            "2\t-\t0.0000\tdel-src\n"
            "-\t2\t0.0000\tdel-tgt\n"
            "3\t3\t0.5000\t1-1\n");
}

TEST(Alignment, GroupKinds) {
  EXPECT_EQ((AlignedGroup{{0}, {0, 1}, 0}.kind()), GroupKind::kOneMany);
  EXPECT_EQ((AlignedGroup{{0, 1}, {0}, 0}.kind()), GroupKind::kManyOne);
  EXPECT_EQ((AlignedGroup{{0, 1}, {0, 1}, 0}.kind()), GroupKind::kManyMany);
  EXPECT_EQ((AlignedGroup{{}, {4}, 0}.kind()), GroupKind::kDeletedTarget);
}

TEST(Alignment, TsvRoundTrip) {
  const std::string tsv =
      "0\t0\t1.0000\t1-1\n"
      "1,2\t1\t0.3333\tN-1\n"
      "3\t-\t0.0000\tdel-src\n"
      "4\t2,3\t0.5000\t1-N\n";
  const Alignment a = parse_alignment_tsv(tsv);
  EXPECT_EQ(a.source_count, 5u);
  EXPECT_EQ(a.target_count, 4u);
  EXPECT_EQ(to_tsv(a), tsv);
  EXPECT_TRUE(is_monotone(a));
}

TEST(Alignment, RejectsMalformedTsv) {
  const std::vector<std::string> bad = {
      "0\t0\t1.0\n",                        // three fields
      "0\t0\tx\t1-1\n",                     // bad score
      "0\t0\t1.0\t1-N\n",                   // kind mismatch
      "0\t0\t1.0\t1-1\n0\t1\t1.0\t1-1\n",  // index reused
      "-\t-\t0\tdel-src\n",                 // empty group
      "a\t0\t1.0\t1-1\n",                   // bad index
  };
  for (const std::string& tsv : bad) {
    try {
      parse_alignment_tsv(tsv);
      ADD_FAILURE() << tsv;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kFormat) << tsv;
    }
  }
  EXPECT_THROW(parse_alignment_tsv("5\t0\t1.0\t1-1\n", 3, 3), Error);
}

TEST(Alignment, Crossing) {
  EXPECT_TRUE(groups_cross({{0}, {1}, 0}, {{1}, {0}, 0}));
  EXPECT_FALSE(groups_cross({{0}, {0}, 0}, {{1}, {1}, 0}));
  EXPECT_TRUE(groups_cross({{0, 1}, {0}, 0}, {{1}, {1}, 0}));
}

}  // namespace
}  // namespace chunkalign
