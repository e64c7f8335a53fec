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

// Readers and writers for the two on-disk formats.
//
// Triplet corpus, one sentence per line:
//
//   The menu is interesting .####[([1], [3], 'POS')]
//
//   Tokens are separated by single spaces. Each entry lists the aspect word
//   indices, the opinion word indices and the polarity. Index lists must be
//   contiguous. Double quotes and extra spaces are accepted on read; output
//   always uses the form shown above.
//
// Tag table interchange:
//
//   #table <sentence-id> <n> <3d|2d|1d>
//   <start> <end> <label>
//   ...
//
//   One line per non-default cell, sorted by (start, end), tables separated
//   by one blank line. ASCII, single spaces, LF line endings.

#ifndef SPANTAG_CORPUS_HPP_
#define SPANTAG_CORPUS_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spantag/codec.hpp"
#include "spantag/core.hpp"
#include "spantag/metrics.hpp"
#include "spantag/span_table.hpp"

namespace spantag {

struct ParseIssue {
  std::size_t line = 0;
  std::string message;
};

// Parse failure carrying every located problem found in one input.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::vector<ParseIssue> issues)
      : Error(render(source, issues)),
        source_(std::move(source)),
        issues_(std::move(issues)) {}

  const std::string& source() const { return source_; }
  const std::vector<ParseIssue>& issues() const { return issues_; }

 private:
  static std::string render(const std::string& source,
                            const std::vector<ParseIssue>& issues) {
    std::string out;
    for (const ParseIssue& issue : issues) {
      if (!out.empty()) out += '\n';
      out += source + ":" + std::to_string(issue.line) + ": " + issue.message;
    }
    return out;
  }

  std::string source_;
  std::vector<ParseIssue> issues_;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

// Splits on '\n'; a trailing newline does not start another line. A
// trailing '\r' on each line is dropped.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    fields.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

inline bool parse_int(std::string_view text, int& value) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

// Cursor over the bracketed triplet list of a corpus line.
class TripletListScanner {
 public:
  explicit TripletListScanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::vector<int> index_list() {
    expect('[');
    std::vector<int> out;
    if (peek(']')) fail("empty index list");
    while (true) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '-')) {
        ++pos_;
      }
      int value = 0;
      if (!parse_int(text_.substr(start, pos_ - start), value)) {
        fail("expected an integer index");
      }
      if (value < 0) fail("negative index " + std::to_string(value));
      out.push_back(value);
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }

  std::string_view quoted() {
    skip_ws();
    if (pos_ >= text_.size() || (text_[pos_] != '\'' && text_[pos_] != '"')) {
      fail("expected a quoted sentiment");
    }
    const char quote = text_[pos_++];
    const std::size_t close = text_.find(quote, pos_);
    if (close == std::string_view::npos) fail("unterminated quote");
    std::string_view value = text_.substr(pos_, close - pos_);
    pos_ = close + 1;
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(message + " at column " + std::to_string(pos_ + 1) +
                " of the triplet list");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Span hull_of(std::vector<int> indices, const char* role, int n) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] != indices[i - 1] + 1) {
      throw Error(std::string("non-contiguous ") + role + " index list");
    }
  }
  if (indices.back() >= n) {
    throw Error(std::string(role) + " index " + std::to_string(indices.back()) +
                " out of range for " + std::to_string(n) + " tokens");
  }
  return Span(indices.front(), indices.back());
}

inline void append_indices(std::string& out, const Span& span) {
  out += '[';
  for (int k = span.start; k <= span.end; ++k) {
    if (k != span.start) out += ", ";
    out += std::to_string(k);
  }
  out += ']';
}

}  // namespace detail

struct ParsedLine {
  Sentence sentence;
  TripletList triplets;  // deduplicated, original order
  std::size_t duplicates_removed = 0;
};

// Parses one corpus line. The sentence id is the 1-based line number.
// Throws Error describing the first problem.
inline ParsedLine parse_v2_line(std::string_view line,
                                std::size_t line_number = 1) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const std::size_t sep = line.rfind("####");
  if (sep == std::string_view::npos) throw Error("missing '####' separator");

  std::vector<std::string> tokens;
  const std::string_view text = line.substr(0, sep);
  std::size_t pos = 0;
  while (true) {
    const std::size_t space = text.find(' ', pos);
    const std::string_view tok = text.substr(pos, space - pos);
    if (tok.empty()) throw Error("empty token in sentence text");
    tokens.emplace_back(tok);
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  Sentence sentence(std::to_string(line_number), std::move(tokens));
  const int n = sentence.size();

  ParsedLine out{std::move(sentence), {}, 0};
  detail::TripletListScanner scan(line.substr(sep + 4));
  scan.expect('[');
  if (scan.peek(']')) {
    scan.expect(']');
  } else {
    while (true) {
      scan.expect('(');
      const Span aspect = detail::hull_of(scan.index_list(), "aspect", n);
      scan.expect(',');
      const Span opinion = detail::hull_of(scan.index_list(), "opinion", n);
      scan.expect(',');
      const std::string_view label = scan.quoted();
      const auto sentiment = parse_sentiment(label);
      if (!sentiment) {
        throw Error("unknown sentiment '" + std::string(label) + "'");
      }
      scan.expect(')');
      if (aspect == opinion) {
        throw Error("aspect and opinion cover the same span");
      }
      out.triplets.push_back(Triplet{aspect, opinion, *sentiment});
      if (scan.peek(',')) {
        scan.expect(',');
        continue;
      }
      scan.expect(']');
      break;
    }
  }
  if (!scan.at_end()) scan.fail("trailing characters");
  out.duplicates_removed = dedupe_stable(out.triplets);
  return out;
}

// Canonical corpus line for one sentence.
inline std::string format_v2_line(const Sentence& sentence,
                                  const TripletList& triplets) {
  std::string out;
  for (std::size_t i = 0; i < sentence.tokens().size(); ++i) {
    if (i) out += ' ';
    out += sentence.tokens()[i];
  }
  out += "####[";
  for (std::size_t i = 0; i < triplets.size(); ++i) {
    if (i) out += ", ";
    out += '(';
    detail::append_indices(out, triplets[i].aspect);
    out += ", ";
    detail::append_indices(out, triplets[i].opinion);
    out += ", '";
    out += to_string(triplets[i].sentiment);
    out += "')";
  }
  out += ']';
  return out;
}

// One split of a triplet corpus. `gold[k]` belongs to `sentences[k]`.
struct CorpusSplit {
  std::string name;
  std::vector<Sentence> sentences;
  std::vector<TripletList> gold;
  std::size_t duplicates_removed = 0;

  std::size_t size() const { return sentences.size(); }

  TripletsById gold_by_id() const {
    TripletsById out;
    for (std::size_t k = 0; k < sentences.size(); ++k) {
      out[sentences[k].id()] = gold[k];
    }
    return out;
  }
};

// Parses a whole corpus. Every bad line is reported; nothing is skipped.
inline CorpusSplit parse_corpus(std::string_view text, std::string name) {
  CorpusSplit split;
  split.name = std::move(name);
  std::vector<ParseIssue> issues;
  const auto lines = detail::split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    try {
      if (lines[k].empty()) throw Error("empty line");
      ParsedLine parsed = parse_v2_line(lines[k], k + 1);
      split.duplicates_removed += parsed.duplicates_removed;
      split.sentences.push_back(std::move(parsed.sentence));
      split.gold.push_back(std::move(parsed.triplets));
    } catch (const Error& e) {
      issues.push_back(ParseIssue{k + 1, e.what()});
    }
  }
  if (!issues.empty()) throw ParseError(split.name, std::move(issues));
  return split;
}

inline CorpusSplit read_corpus(const std::string& path) {
  return parse_corpus(detail::read_file(path), path);
}

inline std::string format_corpus(const CorpusSplit& split) {
  std::string out;
  for (std::size_t k = 0; k < split.sentences.size(); ++k) {
    out += format_v2_line(split.sentences[k], split.gold[k]);
    out += '\n';
  }
  return out;
}

inline void write_corpus(const CorpusSplit& split, const std::string& path) {
  detail::write_file(path, format_corpus(split));
}

// ---------------------------------------------------------------------------
// Tag table interchange.

inline std::string format_tagtables(const std::vector<TagTable>& tables) {
  std::string out;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const TagTable& table = tables[k];
    if (k) out += '\n';
    out += "#table " + table.sentence_id() + " " + std::to_string(table.size()) +
           " " + std::string(to_string(table.scheme())) + "\n";
    for (const auto& [span, tag] : table.cells()) {
      out += std::to_string(span.start) + " " + std::to_string(span.end) + " " +
             format_label(tag, table.scheme()) + "\n";
    }
  }
  return out;
}

inline std::vector<TagTable> parse_tagtables(std::string_view text,
                                             const std::string& source) {
  std::vector<TagTable> tables;
  std::vector<ParseIssue> issues;
  std::set<std::string> seen_ids;
  bool in_table = false;
  const auto lines = detail::split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::string_view line = lines[k];
    const std::size_t line_no = k + 1;
    auto issue = [&](std::string message) {
      issues.push_back(ParseIssue{line_no, std::move(message)});
    };
    if (line.empty()) {
      in_table = false;
      continue;
    }
    const auto fields = detail::split_fields(line);
    if (fields[0] == "#table") {
      in_table = false;
      int n = 0;
      std::optional<Scheme> scheme;
      if (fields.size() != 4 || !detail::parse_int(fields[2], n) || n < 1 ||
          !(scheme = parse_scheme(fields[3]))) {
        issue("malformed header, expected '#table <id> <n> <3d|2d|1d>'");
        continue;
      }
      const std::string id(fields[1]);
      if (!seen_ids.insert(id).second) {
        issue("duplicate table for sentence '" + id + "'");
        continue;
      }
      tables.emplace_back(id, n, *scheme);
      in_table = true;
      continue;
    }
    if (!in_table) {
      issue("cell line outside a table");
      continue;
    }
    TagTable& table = tables.back();
    int start = 0, end = 0;
    if (fields.size() != 3 || !detail::parse_int(fields[0], start) ||
        !detail::parse_int(fields[1], end)) {
      issue("malformed cell, expected '<start> <end> <label>'");
      continue;
    }
    const Span span(start, end);
    if (!span.valid_for(table.size())) {
      issue("span " + std::to_string(start) + " " + std::to_string(end) +
            " out of range for " + std::to_string(table.size()) + " tokens");
      continue;
    }
    const auto tag = parse_label(fields[2], table.scheme());
    if (!tag) {
      issue("label '" + std::string(fields[2]) + "' is not in the " +
            std::string(to_string(table.scheme())) + " label set");
      continue;
    }
    if (tag->is_default()) {
      issue("default label must not be listed");
      continue;
    }
    if (table.has_cell(span)) {
      issue("duplicate cell " + std::to_string(start) + " " +
            std::to_string(end));
      continue;
    }
    table.set(span, *tag);
  }
  if (!issues.empty()) throw ParseError(source, std::move(issues));
  return tables;
}

inline std::vector<TagTable> read_tagtables(const std::string& path) {
  return parse_tagtables(detail::read_file(path), path);
}

inline void write_tagtables(const std::vector<TagTable>& tables,
                            const std::string& path) {
  detail::write_file(path, format_tagtables(tables));
}

}  // namespace spantag

#endif  // SPANTAG_CORPUS_HPP_
