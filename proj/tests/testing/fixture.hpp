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

// The three-sentence restaurant-review fixture, embedded so tests do not
// depend on the working directory. tests/data/fixture.txt holds the same
// text.

#ifndef SPANTAG_TESTS_TESTING_FIXTURE_HPP_
#define SPANTAG_TESTS_TESTING_FIXTURE_HPP_

#include <string_view>

#include "spantag/core.hpp"
#include "spantag/corpus.hpp"

namespace spantag::testing {

inline constexpr std::string_view kFixtureText =
    "The menu is interesting and quite reasonably priced .####"
    "[([1], [3], 'POS'), ([1], [6, 7], 'POS'), ([7], [6], 'POS')]\n"
    "BEST spicy tuna roll , great asian salad .####"
    "[([1, 2, 3], [0], 'POS'), ([6, 7], [5], 'POS')]\n"
    "Service is excellent , no wait , and you get a lot for the price .####"
    "[([0], [2], 'POS'), ([5], [4], 'POS')]\n";

inline CorpusSplit fixture_split() {
  return parse_corpus(kFixtureText, "fixture");
}

// Gold of the first sentence, spelled out by hand.
inline TripletList menu_gold() {
  return {
      Triplet{Span(1, 1), Span(3, 3), Sentiment::kPos},
      Triplet{Span(1, 1), Span(6, 7), Sentiment::kPos},
      Triplet{Span(7, 7), Span(6, 6), Sentiment::kPos},
  };
}

inline Sentence menu_sentence() {
  return Sentence("1", {"The", "menu", "is", "interesting", "and", "quite",
                        "reasonably", "priced", "."});
}

}  // namespace spantag::testing

#endif  // SPANTAG_TESTS_TESTING_FIXTURE_HPP_
