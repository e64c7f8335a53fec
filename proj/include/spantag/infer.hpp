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

// Tag table -> triplet decoding.
//
// greedy_decode visits every sentiment snippet (i, j, s) and tries two
// orderings:
//
//   aspect first:  aspect (i, k) starts the snippet, opinion (l, j) ends it
//   opinion first: opinion (i, k) starts the snippet, aspect (l, j) ends it
//
// In each ordering it keeps the longest candidate on either side. A
// candidate equal to the whole snippet is used only when it is the sole
// candidate on its side. Each ordering yields at most one triplet.
//
// exhaustive_decode keeps every aspect/opinion pairing that covers the
// snippet's two boundaries instead of the longest one.

#ifndef SPANTAG_INFER_HPP_
#define SPANTAG_INFER_HPP_

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <vector>

#include "spantag/boundary_index.hpp"
#include "spantag/codec.hpp"
#include "spantag/core.hpp"
#include "spantag/span_table.hpp"

namespace spantag {

struct DecoderOutput {
  // Sorted by (snippet, ordering, aspect, opinion); no duplicates.
  TripletList triplets;
  std::size_t snippets_visited = 0;
  std::size_t candidates_examined = 0;
  // Snippets whose pairing collapsed to aspect == opinion == snippet. Such
  // pairs are not triplets and are dropped.
  std::vector<Span> suppressed;
};

namespace detail {

struct TermSets {
  std::vector<Span> aspects;
  std::vector<Span> opinions;
  std::vector<std::pair<Span, Sentiment>> snippets;
};

inline TermSets collect_terms(const TagTable& table) {
  TermSets sets;
  for (const auto& [span, tag] : table.cells()) {
    if (tag.aspect) sets.aspects.push_back(span);
    if (tag.opinion) sets.opinions.push_back(span);
    if (tag.sentiment) sets.snippets.emplace_back(span, *tag.sentiment);
  }
  return sets;
}

}  // namespace detail

// Rows are swept from the last start to the first so the end-anchored
// candidates accumulate in O(n) state; see BoundarySweep.
inline DecoderOutput greedy_decode(const TagTable& table, Scheme scheme) {
  detail::check_scheme(table, scheme);
  const int n = table.size();
  BoundarySweep aspects(n), opinions(n);

  DecoderOutput out;
  // Triplets of each row, emitted last row first; `row_begin` marks where
  // every row's block starts. At most two per sentiment cell.
  TripletList& swept = out.triplets;
  swept.reserve(2 * table.cell_count());
  std::vector<std::size_t> row_begin;
  std::vector<std::pair<int, Sentiment>> row_snippets;

  auto it = table.cells().rbegin();
  const auto stop = table.cells().rend();
  while (it != stop) {
    const int i = it->first.start;
    aspects.open_row(i);
    opinions.open_row(i);
    row_snippets.clear();
    for (; it != stop && it->first.start == i; ++it) {
      const auto& [span, tag] = *it;
      detail::check_expressible(span, tag, scheme);
      if (tag.aspect) aspects.mark(span.end);
      if (tag.opinion) opinions.mark(span.end);
      if (tag.sentiment) row_snippets.emplace_back(span.end, *tag.sentiment);
    }
    aspects.close_row();
    opinions.close_row();
    row_begin.push_back(swept.size());

    // Cells arrived with decreasing ends.
    for (auto s = row_snippets.rbegin(); s != row_snippets.rend(); ++s) {
      const int j = s->first;
      const Sentiment sentiment = s->second;
      const Span snippet(i, j);
      ++out.snippets_visited;
      const std::size_t before = swept.size();

      auto emit = [&](Span aspect, Span opinion) {
        if (aspect == opinion) {
          out.suppressed.push_back(snippet);
          return;
        }
        const Triplet t{aspect, opinion, sentiment};
        if (std::find(swept.begin() + before, swept.end(), t) == swept.end()) {
          swept.push_back(t);
        }
      };

      // Aspect before opinion.
      out.candidates_examined +=
          aspects.count_from_start(j) + opinions.count_to_end(j);
      if (auto k = aspects.longest_from_start(j)) {
        if (auto l = opinions.longest_to_end(j)) {
          emit(Span(i, *k), Span(*l, j));
        }
      }

      // Opinion before aspect.
      out.candidates_examined +=
          opinions.count_from_start(j) + aspects.count_to_end(j);
      if (auto k = opinions.longest_from_start(j)) {
        if (auto l = aspects.longest_to_end(j)) {
          emit(Span(*l, j), Span(i, *k));
        }
      }
    }
  }

  // Restore snippet order: reversing everything puts the rows in order,
  // then each row block is flipped back.
  const std::size_t m = swept.size();
  std::reverse(swept.begin(), swept.end());
  std::size_t end = m;
  for (auto b = row_begin.rbegin(); b != row_begin.rend(); ++b) {
    std::reverse(swept.begin() + (m - end), swept.begin() + (m - *b));
    end = *b;
  }
  std::sort(out.suppressed.begin(), out.suppressed.end());
  return out;
}

inline DecoderOutput greedy_decode(const TagTable& table) {
  return greedy_decode(table, table.scheme());
}

inline DecoderOutput exhaustive_decode(const TagTable& table, Scheme scheme) {
  validate_for(table, scheme);
  const int n = table.size();
  const auto at = [n](int i, int j) {
    return static_cast<std::size_t>(i) * n + j;
  };
  std::vector<char> is_aspect(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> is_opinion(is_aspect.size(), 0);
  const detail::TermSets terms = detail::collect_terms(table);
  for (const Span& s : terms.aspects) is_aspect[at(s.start, s.end)] = 1;
  for (const Span& s : terms.opinions) is_opinion[at(s.start, s.end)] = 1;

  using Keyed = std::tuple<Span, Span, Span, Sentiment>;  // snippet, a, o, s
  std::vector<Keyed> found;
  DecoderOutput out;
  for (const auto& [snippet, sentiment] : terms.snippets) {
    const int i = snippet.start;
    const int j = snippet.end;
    ++out.snippets_visited;
    for (int first = 0; first < 2; ++first) {
      // first == 0: aspect starts the snippet; first == 1: opinion does.
      const std::vector<char>& head = first == 0 ? is_aspect : is_opinion;
      const std::vector<char>& tail = first == 0 ? is_opinion : is_aspect;
      for (int k = i; k <= j; ++k) {
        if (!head[at(i, k)]) continue;
        for (int l = i; l <= j; ++l) {
          ++out.candidates_examined;
          if (!tail[at(l, j)]) continue;
          const Span lead(i, k);
          const Span trail(l, j);
          const Span aspect = first == 0 ? lead : trail;
          const Span opinion = first == 0 ? trail : lead;
          if (aspect == opinion) {
            out.suppressed.push_back(snippet);
            continue;
          }
          found.emplace_back(snippet, aspect, opinion, sentiment);
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  out.triplets.reserve(found.size());
  for (const auto& [snippet, aspect, opinion, sentiment] : found) {
    out.triplets.push_back(Triplet{aspect, opinion, sentiment});
  }
  return out;
}

inline DecoderOutput exhaustive_decode(const TagTable& table) {
  return exhaustive_decode(table, table.scheme());
}

}  // namespace spantag

#endif  // SPANTAG_INFER_HPP_
