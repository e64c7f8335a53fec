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

#include "spantag/codec.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "testing/fixture.hpp"
#include "testing/oracles.hpp"

namespace spantag {
namespace {

constexpr std::optional<Sentiment> kNone = std::nullopt;

SpanTag tag(bool a, bool o, std::optional<Sentiment> s = std::nullopt) {
  return SpanTag{a, o, s};
}

Sentence blank_sentence(int n) {
  return Sentence("s", std::vector<std::string>(static_cast<std::size_t>(n), "w"));
}

TEST(EncodeTest, MenuSentenceThreeD) {
  const Encoding enc =
      encode(testing::menu_sentence(), testing::menu_gold(), Scheme::kThreeD);
  const std::map<Span, SpanTag> expected = {
      {Span(1, 1), tag(true, false)},
      {Span(3, 3), tag(false, true)},
      {Span(6, 6), tag(false, true)},
      {Span(7, 7), tag(true, false)},
      {Span(6, 7), tag(false, true, Sentiment::kPos)},
      {Span(1, 3), tag(false, false, Sentiment::kPos)},
      {Span(1, 7), tag(false, false, Sentiment::kPos)},
  };
  EXPECT_EQ(enc.table.cells(), expected);
  EXPECT_TRUE(enc.incidents.empty());
  EXPECT_EQ(enc.table.scheme(), Scheme::kThreeD);
}

TEST(EncodeTest, EmptyGold) {
  const Encoding enc = encode(blank_sentence(5), {}, Scheme::kOneD);
  EXPECT_EQ(enc.table.cell_count(), 0u);
  EXPECT_TRUE(enc.incidents.empty());
}

TEST(EncodeTest, SentimentConflictKeepsFirst) {
  // Both triplets have snippet (0,2).
  const TripletList gold = {
      {Span(0, 0), Span(2, 2), Sentiment::kPos},
      {Span(2, 2), Span(0, 0), Sentiment::kNeg},
  };
  const Encoding enc = encode(blank_sentence(3), gold, Scheme::kThreeD);
  ASSERT_EQ(enc.incidents.size(), 1u);
  EXPECT_EQ(enc.incidents[0].kind, IncidentKind::kSentimentConflict);
  EXPECT_EQ(enc.incidents[0].losing_span, Span(0, 2));
  EXPECT_EQ(enc.incidents[0].triplet, gold[1]);
  EXPECT_EQ(enc.table.at(Span(0, 2)).sentiment, Sentiment::kPos);
}

TEST(EncodeTest, SameSentimentOnSharedSnippetIsNoIncident) {
  const TripletList gold = {
      {Span(0, 0), Span(2, 2), Sentiment::kPos},
      {Span(2, 2), Span(0, 0), Sentiment::kPos},
  };
  EXPECT_TRUE(encode(blank_sentence(3), gold, Scheme::kThreeD).incidents.empty());
}

TEST(EncodeTest, RejectsBadTriplets) {
  EXPECT_THROW(encode(blank_sentence(3),
                      {{Span(0, 0), Span(2, 3), Sentiment::kPos}},
                      Scheme::kThreeD),
               Error);
  EXPECT_THROW(encode(blank_sentence(3),
                      {{Span(1, 1), Span(1, 1), Sentiment::kPos}},
                      Scheme::kThreeD),
               Error);
}

TEST(EncodeTest, RoleCollisionAttributedToTriplet) {
  // (1,1) is an aspect of the first triplet and an opinion of the second.
  const TripletList gold = {
      {Span(1, 1), Span(3, 3), Sentiment::kPos},
      {Span(0, 0), Span(1, 1), Sentiment::kNeg},
  };
  const Encoding two = encode(blank_sentence(4), gold, Scheme::kTwoD);
  ASSERT_EQ(two.incidents.size(), 1u);
  EXPECT_EQ(two.incidents[0].kind, IncidentKind::kRoleCollision2D);
  EXPECT_EQ(two.incidents[0].losing_span, Span(1, 1));
  EXPECT_EQ(two.incidents[0].triplet, gold[1]);
  EXPECT_EQ(two.table.at(Span(1, 1)), tag(true, false));
  EXPECT_EQ(two.table.scheme(), Scheme::kTwoD);
}

// Independent construction of the 3D table straight from the role rules.
std::map<Span, SpanTag> expected_cells(const TripletList& gold) {
  std::map<Span, SpanTag> cells;
  for (const Triplet& t : gold) {
    cells[t.aspect].aspect = true;
    cells[t.opinion].opinion = true;
  }
  for (auto it = gold.rbegin(); it != gold.rend(); ++it) {
    cells[snippet_of(*it)].sentiment = it->sentiment;  // earliest wins
  }
  return cells;
}

TEST(EncodeTest, MatchesRoleRulesOnRandomGold) {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 10;
    const TripletList gold =
        testing::random_triplets(rng, n, 1 + trial % 4, 3);
    const Encoding enc = encode(blank_sentence(n), gold, Scheme::kThreeD);
    ASSERT_EQ(enc.table.cells(), expected_cells(gold));
    for (const Triplet& t : gold) {
      EXPECT_TRUE(enc.table.at(t.aspect).aspect);
      EXPECT_TRUE(enc.table.at(t.opinion).opinion);
      EXPECT_TRUE(enc.table.at(snippet_of(t)).sentiment.has_value());
    }
    for (const EncodingIncident& inc : enc.incidents) {
      EXPECT_EQ(inc.kind, IncidentKind::kSentimentConflict);
    }
  }
}

TEST(EncodeTest, Deterministic) {
  std::mt19937_64 rng(7);
  const TripletList gold = testing::random_triplets(rng, 9, 5, 3);
  for (Scheme s : {Scheme::kThreeD, Scheme::kTwoD, Scheme::kOneD}) {
    const Encoding x = encode(blank_sentence(9), gold, s);
    const Encoding y = encode(blank_sentence(9), gold, s);
    EXPECT_EQ(x.table, y.table);
    ASSERT_EQ(x.incidents.size(), y.incidents.size());
    for (std::size_t k = 0; k < x.incidents.size(); ++k) {
      EXPECT_EQ(x.incidents[k].note, y.incidents[k].note);
    }
  }
}

TEST(ProjectTest, AspectOpinionCellUnderTwoD) {
  TagTable t("s", 3);
  t.set(Span(0, 1), tag(true, true));
  const Encoding e = project(t, Scheme::kTwoD);
  EXPECT_EQ(e.table.at(Span(0, 1)), tag(true, false));
  ASSERT_EQ(e.incidents.size(), 1u);
  EXPECT_EQ(e.incidents[0].kind, IncidentKind::kRoleCollision2D);
  EXPECT_EQ(format_label(e.table.at(Span(0, 1)), Scheme::kTwoD), "A-N");
}

TEST(ProjectTest, OpinionSnippetUnderOneD) {
  TagTable t("s", 3);
  t.set(Span(0, 1), tag(false, true, Sentiment::kPos));
  const Encoding e = project(t, Scheme::kOneD);
  EXPECT_EQ(format_label(e.table.at(Span(0, 1)), Scheme::kOneD), "POS");
  ASSERT_EQ(e.incidents.size(), 1u);
  EXPECT_EQ(e.incidents[0].kind, IncidentKind::kRoleCollision1D);
}

TEST(ProjectTest, SingleRoleUnderOneD) {
  TagTable t("s", 3);
  t.set(Span(2, 2), tag(true, false));
  const Encoding e = project(t, Scheme::kOneD);
  EXPECT_EQ(format_label(e.table.at(Span(2, 2)), Scheme::kOneD), "A");
  EXPECT_TRUE(e.incidents.empty());
}

TEST(ProjectTest, PriorityTable) {
  struct Case {
    SpanTag in;
    SpanTag two;
    SpanTag one;
  };
  const Sentiment p = Sentiment::kNeu;
  const Case cases[] = {
      {tag(true, true), tag(true, false), tag(true, false)},
      {tag(true, false, p), tag(true, false, p), tag(false, false, p)},
      {tag(false, true, p), tag(false, true, p), tag(false, false, p)},
      {tag(true, true, p), tag(true, false, p), tag(false, false, p)},
  };
  for (const Case& c : cases) {
    EXPECT_EQ(reduce_tag(c.in, Scheme::kTwoD), c.two) << to_string(c.in);
    EXPECT_EQ(reduce_tag(c.in, Scheme::kOneD), c.one) << to_string(c.in);
    EXPECT_EQ(reduce_tag(c.in, Scheme::kThreeD), c.in);
  }
}

TEST(ProjectTest, RequiresThreeDInput) {
  TagTable t("s", 2, Scheme::kTwoD);
  EXPECT_THROW(project(t, Scheme::kOneD), Error);
}

TEST(ProjectTest, IncidentCountEqualsInexpressibleCells) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const TagTable t = testing::random_table(rng, 6, {0.3, 0.3, 0.3});
    for (Scheme s : {Scheme::kTwoD, Scheme::kOneD}) {
      std::size_t bad = 0;
      for (const auto& [span, cell] : t.cells()) bad += !is_expressible(cell, s);
      EXPECT_EQ(project(t, s).incidents.size(), bad);
    }
  }
}

TEST(ProjectTest, ProjectLiftProjectIsIdempotent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const TagTable t = testing::random_table(rng, 7, {0.2, 0.2, 0.2});
    for (Scheme s : {Scheme::kTwoD, Scheme::kOneD}) {
      const Encoding once = project(t, s);
      const Encoding twice = project(lift(once.table, s), s);
      EXPECT_EQ(once.table, twice.table);
      EXPECT_TRUE(twice.incidents.empty());
    }
  }
}

TEST(LiftTest, LabelsMapBackToThreeD) {
  TagTable one("s", 5, Scheme::kOneD);
  one.set(Span(1, 3), *parse_label("POS", Scheme::kOneD));
  const TagTable lifted = lift(one, Scheme::kOneD);
  EXPECT_EQ(lifted.scheme(), Scheme::kThreeD);
  EXPECT_EQ(lifted.at(Span(1, 3)), tag(false, false, Sentiment::kPos));

  EXPECT_EQ(parse_label("A-POS", Scheme::kTwoD), tag(true, false, Sentiment::kPos));
  EXPECT_EQ(parse_label("O-N", Scheme::kTwoD), tag(false, true));
}

TEST(LiftTest, IdentityWhenNoIncidents) {
  const Encoding three =
      encode(testing::menu_sentence(), testing::menu_gold(), Scheme::kThreeD);
  const Encoding two =
      encode(testing::menu_sentence(), testing::menu_gold(), Scheme::kTwoD);
  ASSERT_TRUE(two.incidents.empty());
  EXPECT_EQ(lift(two.table, Scheme::kTwoD), three.table);
}

TEST(LiftTest, RejectsForeignLabels) {
  TagTable two("s", 3, Scheme::kTwoD);
  two.set(Span(0, 0), tag(true, true));
  EXPECT_THROW(lift(two, Scheme::kTwoD), Error);
  EXPECT_THROW(lift(two, Scheme::kOneD), Error);
}

TEST(LabelTest, FormatParseRoundTripEverySchemeLabel) {
  for (Scheme s : {Scheme::kThreeD, Scheme::kTwoD, Scheme::kOneD}) {
    int labels = 0;
    for (bool a : {false, true})
      for (bool o : {false, true})
        for (std::optional<Sentiment> sent :
             {kNone, std::optional(Sentiment::kPos),
              std::optional(Sentiment::kNeu), std::optional(Sentiment::kNeg)}) {
          const SpanTag t{a, o, sent};
          if (!is_expressible(t, s)) {
            EXPECT_THROW(format_label(t, s), Error);
            continue;
          }
          ++labels;
          EXPECT_EQ(parse_label(format_label(t, s), s), t);
        }
    // 3D: 2*2*4, 2D: 3*4, 1D: N plus five roles.
    EXPECT_EQ(labels, s == Scheme::kThreeD ? 16 : s == Scheme::kTwoD ? 12 : 6);
  }
}

TEST(LabelTest, RejectsWrongArity) {
  EXPECT_FALSE(parse_label("A-N-N", Scheme::kOneD));
  EXPECT_FALSE(parse_label("A-N", Scheme::kThreeD));
  EXPECT_FALSE(parse_label("A-O-N", Scheme::kTwoD));
  EXPECT_FALSE(parse_label("X", Scheme::kOneD));
  EXPECT_FALSE(parse_label("N-N-pos", Scheme::kThreeD));
}

}  // namespace
}  // namespace spantag
