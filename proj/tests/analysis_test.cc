// Copyright 2026 The spantag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spantag/analysis.hpp"

#include <gtest/gtest.h>

#include <random>

#include "testing/fixture.hpp"
#include "testing/oracles.hpp"

namespace spantag {
namespace {

Sentence words(std::vector<std::string> tokens) {
  return Sentence("x", std::move(tokens));
}

Sentence blank(int n) {
  return Sentence("x", std::vector<std::string>(static_cast<std::size_t>(n), "w"));
}

TEST(ClassifyTest, AllSevenClasses) {
  const Sentiment p = Sentiment::kPos;
  EXPECT_EQ(classify({true, false, std::nullopt}), RoleClass::kANN);
  EXPECT_EQ(classify({false, true, std::nullopt}), RoleClass::kNON);
  EXPECT_EQ(classify({false, false, p}), RoleClass::kNNS);
  EXPECT_EQ(classify({true, true, std::nullopt}), RoleClass::kAON);
  EXPECT_EQ(classify({true, false, p}), RoleClass::kANS);
  EXPECT_EQ(classify({false, true, p}), RoleClass::kNOS);
  EXPECT_EQ(classify({true, true, p}), RoleClass::kAOS);
  EXPECT_THROW(classify(SpanTag{}), Error);
}

TEST(RoleDistributionTest, MenuSentence) {
  const RoleDistribution d = role_distribution(
      encode(testing::menu_sentence(), testing::menu_gold(), Scheme::kThreeD)
          .table);
  RoleDistribution expected;
  expected[RoleClass::kANN] = 2;
  expected[RoleClass::kNON] = 2;
  expected[RoleClass::kNNS] = 2;
  expected[RoleClass::kNOS] = 1;
  EXPECT_EQ(d, expected);
  EXPECT_EQ(d.total(), 7u);
}

TEST(RoleDistributionTest, EmptySplit) {
  EXPECT_EQ(role_distribution(CorpusSplit{}).total(), 0u);
}

TEST(RoleDistributionTest, SumsToCellCountAndIgnoresOrder) {
  std::mt19937_64 rng(41);
  CorpusSplit split;
  std::size_t cells = 0;
  for (int k = 0; k < 40; ++k) {
    const int n = 3 + k % 9;
    split.sentences.push_back(blank(n));
    split.gold.push_back(testing::random_triplets(rng, n, k % 4, 3));
    cells += encode(split.sentences.back(), split.gold.back(), Scheme::kThreeD)
                 .table.cell_count();
  }
  const RoleDistribution d = role_distribution(split);
  EXPECT_EQ(d.total(), cells);
  CorpusSplit reversed = split;
  std::reverse(reversed.sentences.begin(), reversed.sentences.end());
  std::reverse(reversed.gold.begin(), reversed.gold.end());
  EXPECT_EQ(role_distribution(reversed), d);
  EXPECT_EQ(role_distribution(split, 4), d);
}

TEST(CountStatsTest, Fixture) {
  const CountStats s = sentiment_and_count_stats(testing::fixture_split());
  EXPECT_EQ(s, (CountStats{3, 7, 7, 0, 0}));
  EXPECT_EQ(sentiment_and_count_stats(CorpusSplit{}), CountStats{});
}

TEST(SettingCountsTest, Fixture) {
  EXPECT_EQ(setting_counts(testing::fixture_split()),
            (SettingCounts{4, 3, 2, 1}));
  EXPECT_EQ(setting_counts(CorpusSplit{}), SettingCounts{});
}

TEST(LimitationTest, FixtureHasNoneInThreeD) {
  const LimitationReport r =
      limitation_report(testing::fixture_split(), Scheme::kThreeD);
  EXPECT_EQ(r.total_triplets, 7u);
  EXPECT_EQ(r.failures(), 0u);
}

TEST(LimitationTest, Nested) {
  const TripletList gold = {{Span(2, 2), Span(1, 3), Sentiment::kPos}};
  const auto records = sentence_limitations(blank(5), gold, Scheme::kThreeD);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].cause, LimitationCause::kNested);
  EXPECT_EQ(records[0].triplet, gold[0]);
}

TEST(LimitationTest, Greedy) {
  const Sentence s = words({"food", "is", "great", "quality", "and", "service"});
  const TripletList gold = {
      {Span(0, 0), Span(2, 3), Sentiment::kPos},
      {Span(5, 5), Span(2, 2), Sentiment::kPos},
  };
  const auto records = sentence_limitations(s, gold, Scheme::kThreeD);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].cause, LimitationCause::kGreedy);
  EXPECT_EQ(records[0].triplet, gold[1]);
  // The decoder pairs service with the longer opinion instead.
  const auto decoded =
      greedy_decode(encode(s, gold, Scheme::kThreeD).table).triplets;
  EXPECT_NE(std::find(decoded.begin(), decoded.end(),
                      Triplet{Span(5, 5), Span(2, 3), Sentiment::kPos}),
            decoded.end());
}

TEST(LimitationTest, Conflict) {
  // Both triplets have snippet (0,2); the shorter aspect is shadowed.
  const TripletList gold = {
      {Span(0, 0), Span(2, 2), Sentiment::kPos},
      {Span(0, 1), Span(2, 2), Sentiment::kPos},
  };
  const auto records = sentence_limitations(blank(3), gold, Scheme::kThreeD);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].cause, LimitationCause::kConflict);
  EXPECT_EQ(records[0].triplet, gold[0]);
}

TEST(LimitationTest, NestedWinsOverConflict) {
  const TripletList gold = {
      {Span(2, 2), Span(1, 3), Sentiment::kPos},
      {Span(1, 1), Span(3, 3), Sentiment::kPos},
  };
  const auto records = sentence_limitations(blank(5), gold, Scheme::kThreeD);
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(records[0].triplet, gold[0]);
  EXPECT_EQ(records[0].cause, LimitationCause::kNested);
}

TEST(LimitationTest, AspectOpinionCellUnderTwoD) {
  const TripletList gold = {
      {Span(1, 1), Span(3, 3), Sentiment::kPos},
      {Span(0, 0), Span(1, 1), Sentiment::kNeg},
  };
  EXPECT_TRUE(sentence_limitations(blank(4), gold, Scheme::kThreeD).empty());
  const auto records = sentence_limitations(blank(4), gold, Scheme::kTwoD);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].cause, LimitationCause::kMultiRoleAON);
  EXPECT_EQ(records[0].triplet, gold[1]);
  EXPECT_EQ(records[0].scheme, Scheme::kTwoD);
}

TEST(LimitationTest, OpinionSnippetCellUnderOneD) {
  const auto records =
      sentence_limitations(testing::menu_sentence(), testing::menu_gold(),
                           Scheme::kOneD);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].cause, LimitationCause::kMultiRoleAorOP);
  EXPECT_EQ(records[0].triplet, testing::menu_gold()[1]);
}

TEST(LimitationTest, ThreeRoleCellUnderOneD) {
  // (0,2) is an aspect, an opinion and a snippet.
  const TripletList gold = {
      {Span(0, 2), Span(2, 2), Sentiment::kPos},
      {Span(3, 3), Span(0, 2), Sentiment::kPos},
  };
  const Encoding three = encode(blank(4), gold, Scheme::kThreeD);
  EXPECT_EQ(classify(three.table.at(Span(0, 2))), RoleClass::kAOS);
  const auto records = sentence_limitations(blank(4), gold, Scheme::kOneD);
  ASSERT_EQ(records.size(), 2u);
  for (const LimitationRecord& r : records) {
    EXPECT_EQ(r.cause, LimitationCause::kMultiRoleAOP);
  }
}

// Causes partition the failures, and the 3D failures never name a role
// collapse.
TEST(LimitationTest, RandomCorporaInvariants) {
  std::mt19937_64 rng(43);
  CorpusSplit split;
  for (int k = 0; k < 300; ++k) {
    const int n = 3 + k % 10;
    split.sentences.push_back(Sentence(std::to_string(k + 1),
                                       std::vector<std::string>(n, "w")));
    split.gold.push_back(testing::random_triplets(rng, n, 1 + k % 3, 3));
  }
  const LimitationReport three = limitation_report(split, Scheme::kThreeD, 2);
  EXPECT_EQ(three.failures(), three.count(LimitationCause::kNested) +
                                  three.count(LimitationCause::kConflict) +
                                  three.count(LimitationCause::kGreedy));
  for (Scheme s : {Scheme::kTwoD, Scheme::kOneD}) {
    const LimitationReport r = limitation_report(split, s);
    std::size_t sum = 0;
    for (LimitationCause c : kAllCauses) sum += r.count(c);
    EXPECT_EQ(sum, r.failures());
  }
  // Parallel and sequential runs agree record for record.
  EXPECT_EQ(limitation_report(split, Scheme::kOneD, 4).records,
            limitation_report(split, Scheme::kOneD, 1).records);
}

TEST(LimitationTest, ReductionLosesRecoveriesOnFixture) {
  const CorpusSplit split = testing::fixture_split();
  const std::size_t f3 = limitation_report(split, Scheme::kThreeD).failures();
  const std::size_t f2 = limitation_report(split, Scheme::kTwoD).failures();
  const std::size_t f1 = limitation_report(split, Scheme::kOneD).failures();
  EXPECT_LE(f3, f2);
  EXPECT_LE(f2, f1);
  EXPECT_EQ(f1, 1u);
}

}  // namespace
}  // namespace spantag
