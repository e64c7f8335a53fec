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

#ifndef SPANTAG_SPAN_TABLE_HPP_
#define SPANTAG_SPAN_TABLE_HPP_

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "spantag/core.hpp"

namespace spantag {

// Sparse upper-triangular table over the spans of one sentence. Only
// non-default cells are stored; reads of absent in-range spans return a
// value-initialized Cell. `Cell` must provide `bool is_default() const`.
template <typename Cell>
class SpanTable {
 public:
  using CellMap = std::map<Span, Cell>;

  SpanTable(std::string sentence_id, int n)
      : sentence_id_(std::move(sentence_id)), n_(n) {
    if (n_ < 1) throw Error("table needs at least one token");
  }

  const std::string& sentence_id() const { return sentence_id_; }
  int size() const { return n_; }

  Cell at(const Span& span) const {
    check(span);
    auto it = cells_.find(span);
    return it == cells_.end() ? Cell{} : it->second;
  }

  // Stores `value`; a default value erases the cell.
  void set(const Span& span, const Cell& value) {
    check(span);
    if (value.is_default()) {
      cells_.erase(span);
    } else {
      cells_[span] = value;
    }
  }

  bool has_cell(const Span& span) const { return cells_.count(span) > 0; }

  // Cells in (start, end) order.
  const CellMap& cells() const { return cells_; }
  std::size_t cell_count() const { return cells_.size(); }

  friend bool operator==(const SpanTable&, const SpanTable&) = default;

 private:
  void check(const Span& span) const {
    if (!span.valid_for(n_)) {
      std::ostringstream msg;
      msg << "span " << span << " out of range for sentence '" << sentence_id_
          << "' with " << n_ << " tokens";
      throw Error(msg.str());
    }
  }

  std::string sentence_id_;
  int n_ = 0;
  CellMap cells_;
};

// Span tag table for one sentence under one scheme. Cells always hold full
// SpanTag values; a 2D table never sets both aspect and opinion on a cell and
// a 1D table never sets more than one role.
class TagTable : public SpanTable<SpanTag> {
 public:
  TagTable(std::string sentence_id, int n, Scheme scheme = Scheme::kThreeD)
      : SpanTable<SpanTag>(std::move(sentence_id), n), scheme_(scheme) {}

  Scheme scheme() const { return scheme_; }
  void set_scheme(Scheme scheme) { scheme_ = scheme; }

  friend bool operator==(const TagTable&, const TagTable&) = default;

 private:
  Scheme scheme_;
};

}  // namespace spantag

#endif  // SPANTAG_SPAN_TABLE_HPP_
