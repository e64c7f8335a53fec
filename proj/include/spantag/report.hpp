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

#ifndef SPANTAG_REPORT_HPP_
#define SPANTAG_REPORT_HPP_

#include <algorithm>
#include <cstdio>
#include <cstddef>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace spantag {

enum class ReportFormat { kText, kKv };

inline std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

// Plain-text table. Columns are right-aligned; with `label_column` the
// first one is left-aligned instead.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header, bool label_column = true)
      : label_column_(label_column), rows_{std::move(header)} {}

  template <typename... Cells>
  void add(Cells&&... cells) {
    rows_.push_back({to_cell(std::forward<Cells>(cells))...});
  }
  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        const std::string pad(width[c] - row[c].size(), ' ');
        if (c) line += "  ";
        line += c == 0 && label_column_ ? row[c] + pad : pad + row[c];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << '\n';
    }
  }

 private:
  static std::string to_cell(const std::string& s) { return s; }
  static std::string to_cell(const char* s) { return s; }
  static std::string to_cell(std::size_t v) { return std::to_string(v); }
  static std::string to_cell(int v) { return std::to_string(v); }

  bool label_column_;
  std::vector<std::vector<std::string>> rows_;
};

// key=value block, one metric per line.
class KvBlock {
 public:
  template <typename Value>
  void add(const std::string& key, const Value& value) {
    if constexpr (std::is_floating_point_v<Value>) {
      lines_.push_back(key + "=" + fixed(value, 6));
    } else if constexpr (std::is_arithmetic_v<Value>) {
      lines_.push_back(key + "=" + std::to_string(value));
    } else {
      lines_.push_back(key + "=" + std::string(value));
    }
  }
  void print(std::ostream& os) const {
    for (const std::string& line : lines_) os << line << '\n';
  }

 private:
  std::vector<std::string> lines_;
};

}  // namespace spantag

#endif  // SPANTAG_REPORT_HPP_
