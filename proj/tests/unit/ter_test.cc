// Copyright 2026 The segeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "segeval/ter.h"

#include <gtest/gtest.h>

#include "segeval/error.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace segeval {
namespace {

using testing::Line;
using Tokens = std::vector<std::string>;

TerAlignment Ter(const Tokens& hyp, const Tokens& ref,
                 const TerOptions& options = {}) {
  return SentenceTer(hyp, ref, options);
}

TEST(TerTest, IdentityIsZero) {
  const TerAlignment ter = Ter({"a", "b", "c"}, {"a", "b", "c"});
  EXPECT_EQ(ter, (TerAlignment{0, 0, 0, 0, 3}));
  EXPECT_EQ(ter.score(), 0.0);
}

TEST(TerTest, SingleShiftFixture) {
  const TerAlignment ter = Ter({"b", "a", "c", "d"}, {"a", "b", "c", "d"});
  EXPECT_EQ(ter.shifts, 1);
  EXPECT_EQ(ter.edits(), 1);
  EXPECT_EQ(ter.score(), 25.0);
}

TEST(TerTest, SubstitutionWithoutShift) {
  const TerAlignment ter = Ter({"a", "b", "c"}, {"a", "x", "c"});
  EXPECT_EQ(ter, (TerAlignment{0, 0, 1, 0, 3}));
  EXPECT_NEAR(ter.score(), 100.0 / 3.0, 1e-12);
}

TEST(TerTest, InsertionAndDeletionFollowHypothesisView) {
  EXPECT_EQ(Ter({"a", "b", "x"}, {"a", "b"}), (TerAlignment{1, 0, 0, 0, 2}));
  EXPECT_EQ(Ter({"a"}, {"a", "b"}), (TerAlignment{0, 1, 0, 0, 2}));
  EXPECT_EQ(Ter({}, {"a", "b"}), (TerAlignment{0, 2, 0, 0, 2}));
}

TEST(TerTest, NotSymmetric) {
  const TerAlignment forward = Ter({"a"}, {"a", "b", "c", "d"});
  const TerAlignment backward = Ter({"a", "b", "c", "d"}, {"a"});
  EXPECT_EQ(forward.score(), 75.0);
  EXPECT_EQ(backward.score(), 300.0);
}

TEST(TerTest, PhraseShift) {
  // Moving "c d" as one block costs a single shift.
  const TerAlignment ter =
      Ter({"c", "d", "a", "b", "e", "f"}, {"a", "b", "c", "d", "e", "f"});
  EXPECT_EQ(ter.shifts, 1);
  EXPECT_EQ(ter.edits(), 1);
}

TEST(TerTest, ShiftLimitsAreRespected) {
  const Tokens hyp = {"c", "d", "a", "b", "e", "f"};
  const Tokens ref = {"a", "b", "c", "d", "e", "f"};
  EXPECT_EQ(Ter(hyp, ref, {1, 50}).shifts, 2);
  EXPECT_EQ(Ter(hyp, ref, {10, 0}).shifts, 0);
  EXPECT_EQ(Ter(hyp, ref).shifts, 1);
}

TEST(TerTest, EmptyReferenceIsAnError) {
  EXPECT_THROW(Ter({"a"}, {}), Error);
}

TEST(FindBestShiftTest, FixtureTieBreak) {
  // Moving "b" to the front and moving "a" after "b" both fix the sentence;
  // the smaller start wins.
  const auto best = FindBestShift(Tokens{"b", "a", "c", "d"},
                                  Tokens{"a", "b", "c", "d"});
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->shift, (Shift{0, 1, 1}));
  EXPECT_EQ(best->reduction, 2);
}

TEST(FindBestShiftTest, SpanMustOccurInReference) {
  EXPECT_FALSE(
      FindBestShift(Tokens{"x", "y"}, Tokens{"z", "w"}).has_value());
  // "y" occurs in the reference, so moving it to the front is admissible.
  const auto best = FindBestShift(Tokens{"x", "y"}, Tokens{"y", "z"});
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->shift, (Shift{1, 1, 0}));
}

TEST(ApplyShiftTest, MovesSpan) {
  const Tokens hyp = {"a", "b", "c", "d", "e"};
  EXPECT_EQ(ApplyShift(hyp, {1, 2, 3}), (Tokens{"a", "d", "e", "b", "c"}));
  EXPECT_EQ(ApplyShift(hyp, {3, 1, 0}), (Tokens{"d", "a", "b", "c", "e"}));
  EXPECT_THROW(ApplyShift(hyp, {4, 2, 0}), Error);
}

TEST(WordEditDistanceTest, MatchesOracle) {
  testing::Rng rng(3);
  const Tokens vocabulary = {"a", "b", "c"};
  for (int i = 0; i < 500; ++i) {
    const Tokens a = testing::RandomSentence(rng, vocabulary, 0, 9);
    const Tokens b = testing::RandomSentence(rng, vocabulary, 0, 9);
    auto ids = [](const Tokens& t) {
      std::vector<int> out;
      for (const auto& s : t) out.push_back(s[0]);
      return out;
    };
    EXPECT_EQ(WordEditDistance(a, b), oracle::Levenshtein(ids(a), ids(b)));
  }
}

TEST(CorpusTerTest, PoolsCounters) {
  const std::vector<TokenizedLine> hyps = {Line({"a", "b", "c", "x"}),
                                           Line({"a", "b", "c", "d", "e", "y"})};
  const std::vector<TokenizedLine> refs = {Line({"a", "b", "c", "d"}),
                                           Line({"a", "b", "c", "d", "e", "f"})};
  const TerAlignment total = CorpusTer(hyps, refs);
  EXPECT_EQ(total.edits(), 2);
  EXPECT_EQ(total.ref_length, 10);
  EXPECT_EQ(total.score(), 20.0);
}

TEST(CorpusTerTest, SinglePairEqualsSentence) {
  const TerAlignment corpus =
      CorpusTer({Line({"b", "a", "c", "d"})}, {Line({"a", "b", "c", "d"})});
  EXPECT_EQ(corpus, Ter({"b", "a", "c", "d"}, {"a", "b", "c", "d"}));
}

TEST(CorpusTerTest, Errors) {
  EXPECT_THROW(CorpusTer({Line({"a"})}, {}), Error);
  EXPECT_THROW(CorpusTer({}, {}), Error);
  EXPECT_THROW(CorpusTer({Line({"a"})}, {Line({})}), Error);
}

TEST(TerSummaryTest, Format) {
  EXPECT_EQ(FormatTerSummary({1, 2, 3, 4, 40}),
            "TER = 25.00 (ins=1, del=2, sub=3, shift=4, ref_len=40)");
}

}  // namespace
}  // namespace segeval
