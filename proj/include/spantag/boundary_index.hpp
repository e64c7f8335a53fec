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

#ifndef SPANTAG_BOUNDARY_INDEX_HPP_
#define SPANTAG_BOUNDARY_INDEX_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "spantag/core.hpp"

namespace spantag {

// Constant-time boundary queries over a set of term spans of one sentence.
//
// For a window [i, j] the greedy decoder needs the terms that start at i and
// end inside the window, and the terms that end at j and start inside it.
// Both families are answered from prefix tables filled in O(n^2), so each
// query costs O(1) no matter how many candidates the window holds.
class BoundaryIndex {
 public:
  BoundaryIndex() = default;

  template <typename SpanRange>
  BoundaryIndex(int n, const SpanRange& spans)
      : n_(n), cells_(static_cast<std::size_t>(n) * (n + 1) / 2) {
    // Membership lives in start_count until the sweep overwrites it.
    for (const Span& s : spans) cells_[index(s.start, s.end)].start_count = 1;
    // Row i of the start family extends row i to the right; row i of the
    // end family extends row i + 1 of the same column, so one bottom-up,
    // row-major sweep fills both.
    for (int i = n - 1; i >= 0; --i) {
      std::int32_t count = 0;
      std::int32_t last = -1;
      for (int j = i; j < n; ++j) {
        Cell& c = cells_[index(i, j)];
        const bool member = c.start_count != 0;
        if (member) {
          ++count;
          last = j;
        }
        c.start_count = count;
        c.start_last = last;
        const Cell* below = j > i ? &cells_[index(i + 1, j)] : nullptr;
        c.end_count = (below ? below->end_count : 0) + member;
        c.end_first = member ? i : (below ? below->end_first : -1);
      }
    }
  }

  int size() const { return n_; }

  // |{k : i <= k <= j, (i, k) in set}|
  int count_from_start(int i, int j) const {
    return cells_[index(i, j)].start_count;
  }

  // |{l : i <= l <= j, (l, j) in set}|
  int count_to_end(int i, int j) const { return cells_[index(i, j)].end_count; }

  // Greedy pick among terms (i, k) inside [i, j]: the largest k, skipping
  // k == j unless it is the only candidate.
  std::optional<int> longest_from_start(int i, int j) const {
    const Cell& c = cells_[index(i, j)];
    if (c.start_count == 0) return std::nullopt;
    if (c.start_count > 1 && c.start_last == j) {
      return cells_[index(i, j - 1)].start_last;
    }
    return c.start_last;
  }

  // Greedy pick among terms (l, j) inside [i, j]: the smallest l, skipping
  // l == i unless it is the only candidate.
  std::optional<int> longest_to_end(int i, int j) const {
    const Cell& c = cells_[index(i, j)];
    if (c.end_count == 0) return std::nullopt;
    if (c.end_count > 1 && c.end_first == i) {
      return cells_[index(i + 1, j)].end_first;
    }
    return c.end_first;
  }

 private:
  // Prefix summaries for span (i, j).
  struct Cell {
    std::int32_t start_count = 0;
    std::int32_t start_last = -1;
    std::int32_t end_count = 0;
    std::int32_t end_first = -1;
  };

  // Row-major upper triangle, i <= j.
  std::size_t index(int i, int j) const {
    const std::size_t row = static_cast<std::size_t>(i);
    return row * n_ - row * (row - 1) / 2 + static_cast<std::size_t>(j - i);
  }

  int n_ = 0;
  std::vector<Cell> cells_;
};

// The same queries as BoundaryIndex in O(n) memory, for callers that visit
// windows one start row at a time from the last row up to row 0.
//
// Per row i: mark() every member (i, j), call close_row(), then query
// windows [i, j]. The end family accumulates across rows; the start family
// covers row i only.
class BoundarySweep {
 public:
  explicit BoundarySweep(int n)
      : n_(n),
        col_count_(n, 0),
        col_first_(n, -1),
        col_prev_first_(n, -1),
        row_member_(n, 0),
        row_count_(n, 0),
        row_last_(n, -1) {}

  int size() const { return n_; }
  int row() const { return row_; }

  // Starts row `i`; rows must arrive in strictly decreasing order.
  void open_row(int i) { row_ = i; }

  void mark(int j) {
    row_member_[j] = 1;
    col_prev_first_[j] = col_first_[j];
    col_first_[j] = row_;
    ++col_count_[j];
  }

  // Fills the start family of the current row.
  void close_row() {
    std::int32_t count = 0;
    std::int32_t last = -1;
    for (int j = row_; j < n_; ++j) {
      if (row_member_[j]) {
        ++count;
        last = j;
        row_member_[j] = 0;
      }
      row_count_[j] = count;
      row_last_[j] = last;
    }
  }

  // Queries for the window [row(), j].
  int count_from_start(int j) const { return row_count_[j]; }
  int count_to_end(int j) const { return col_count_[j]; }

  std::optional<int> longest_from_start(int j) const {
    if (row_count_[j] == 0) return std::nullopt;
    if (row_count_[j] > 1 && row_last_[j] == j) return row_last_[j - 1];
    return row_last_[j];
  }

  std::optional<int> longest_to_end(int j) const {
    if (col_count_[j] == 0) return std::nullopt;
    // A first == row() entry was marked in this row, so the previous
    // first is the best candidate strictly below it.
    if (col_count_[j] > 1 && col_first_[j] == row_) return col_prev_first_[j];
    return col_first_[j];
  }

 private:
  int n_ = 0;
  int row_ = 0;
  std::vector<std::int32_t> col_count_;
  std::vector<std::int32_t> col_first_;
  std::vector<std::int32_t> col_prev_first_;
  std::vector<char> row_member_;
  std::vector<std::int32_t> row_count_;
  std::vector<std::int32_t> row_last_;
};

}  // namespace spantag

#endif  // SPANTAG_BOUNDARY_INDEX_HPP_
