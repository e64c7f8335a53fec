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

#ifndef SPANTAG_CORE_HPP_
#define SPANTAG_CORE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spantag {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Inclusive token interval [start, end] within one sentence.
struct Span {
  int start = 0;
  int end = 0;

  constexpr Span() = default;
  constexpr Span(int s, int e) : start(s), end(e) {}

  constexpr int length() const { return end - start + 1; }
  constexpr bool valid_for(int n) const {
    return 0 <= start && start <= end && end < n;
  }
  constexpr bool contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }

  friend constexpr auto operator<=>(const Span&, const Span&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Span& s) {
  return os << '(' << s.start << ',' << s.end << ')';
}

enum class Sentiment { kPos, kNeu, kNeg };

inline constexpr Sentiment kAllSentiments[] = {Sentiment::kPos,
                                               Sentiment::kNeu,
                                               Sentiment::kNeg};

inline std::string_view to_string(Sentiment s) {
  switch (s) {
    case Sentiment::kPos: return "POS";
    case Sentiment::kNeu: return "NEU";
    case Sentiment::kNeg: return "NEG";
  }
  return "?";
}

inline std::optional<Sentiment> parse_sentiment(std::string_view text) {
  if (text == "POS") return Sentiment::kPos;
  if (text == "NEU") return Sentiment::kNeu;
  if (text == "NEG") return Sentiment::kNeg;
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, Sentiment s) {
  return os << to_string(s);
}

// One (aspect, opinion, sentiment) triple. The aspect and opinion spans must
// differ; `make_triplet` enforces this, aggregate init does not.
struct Triplet {
  Span aspect;
  Span opinion;
  Sentiment sentiment = Sentiment::kPos;

  friend constexpr auto operator<=>(const Triplet&, const Triplet&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Triplet& t) {
  return os << '(' << t.aspect << ", " << t.opinion << ", " << t.sentiment
            << ')';
}

inline Triplet make_triplet(Span aspect, Span opinion, Sentiment s) {
  if (aspect == opinion) {
    throw Error("triplet aspect and opinion spans must differ");
  }
  return Triplet{aspect, opinion, s};
}

// Ordered triplet collection. Gold lists keep corpus order; decoder output is
// sorted. Both are free of duplicates.
using TripletList = std::vector<Triplet>;

// Removes repeated triplets while keeping the first occurrence in place.
// Returns the number of entries dropped.
inline std::size_t dedupe_stable(TripletList& list) {
  TripletList kept;
  kept.reserve(list.size());
  for (const Triplet& t : list) {
    if (std::find(kept.begin(), kept.end(), t) == kept.end()) kept.push_back(t);
  }
  std::size_t removed = list.size() - kept.size();
  list = std::move(kept);
  return removed;
}

// Pre-tokenized sentence. Tokens never contain whitespace.
class Sentence {
 public:
  Sentence(std::string id, std::vector<std::string> tokens)
      : id_(std::move(id)), tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw Error("sentence must have at least one token");
    for (const std::string& tok : tokens_) {
      if (tok.empty()) throw Error("sentence contains an empty token");
      if (tok.find_first_of(" \t\r\n") != std::string::npos) {
        throw Error("token contains whitespace: '" + tok + "'");
      }
    }
  }

  const std::string& id() const { return id_; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  int size() const { return static_cast<int>(tokens_.size()); }

 private:
  std::string id_;
  std::vector<std::string> tokens_;
};

// Boundary hull of the two terms: the earlier term's start to the later
// term's end.
constexpr Span snippet_of(const Triplet& t) {
  return Span(std::min(t.aspect.start, t.opinion.start),
              std::max(t.aspect.end, t.opinion.end));
}

enum class SpanRelation {
  kDisjoint,
  kSharedStart,
  kSharedEnd,
  kNestedNoSharedBoundary,
  kIdentical,
  kPartialOverlap,
};

inline std::string_view to_string(SpanRelation r) {
  switch (r) {
    case SpanRelation::kDisjoint: return "Disjoint";
    case SpanRelation::kSharedStart: return "SharedStart";
    case SpanRelation::kSharedEnd: return "SharedEnd";
    case SpanRelation::kNestedNoSharedBoundary: return "NestedNoSharedBoundary";
    case SpanRelation::kIdentical: return "Identical";
    case SpanRelation::kPartialOverlap: return "PartialOverlap";
  }
  return "?";
}

// Classifies how two spans of the same sentence sit relative to each other.
// SharedStart/SharedEnd take precedence over containment.
constexpr SpanRelation relation(const Span& p, const Span& q) {
  if (p == q) return SpanRelation::kIdentical;
  if (p.end < q.start || q.end < p.start) return SpanRelation::kDisjoint;
  if (p.start == q.start) return SpanRelation::kSharedStart;
  if (p.end == q.end) return SpanRelation::kSharedEnd;
  if (p.contains(q) || q.contains(p)) {
    return SpanRelation::kNestedNoSharedBoundary;
  }
  return SpanRelation::kPartialOverlap;
}

// The three span tagging variants.
enum class Scheme { kThreeD, kTwoD, kOneD };

inline std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::kThreeD: return "3d";
    case Scheme::kTwoD: return "2d";
    case Scheme::kOneD: return "1d";
  }
  return "?";
}

inline std::optional<Scheme> parse_scheme(std::string_view text) {
  if (text == "3d" || text == "3D") return Scheme::kThreeD;
  if (text == "2d" || text == "2D") return Scheme::kTwoD;
  if (text == "1d" || text == "1D") return Scheme::kOneD;
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, Scheme s) {
  return os << to_string(s);
}

// Role sub-tags of one span: aspect dimension {N, A}, opinion dimension
// {N, O} and sentiment dimension {N, NEG, NEU, POS}. The default value is
// N-N-N.
struct SpanTag {
  bool aspect = false;
  bool opinion = false;
  std::optional<Sentiment> sentiment;

  constexpr bool is_default() const {
    return !aspect && !opinion && !sentiment.has_value();
  }
  constexpr int active_roles() const {
    return int{aspect} + int{opinion} + int{sentiment.has_value()};
  }

  friend constexpr bool operator==(const SpanTag&, const SpanTag&) = default;
};

// Canonical 3D spelling, e.g. "N-O-POS".
inline std::string to_string(const SpanTag& tag) {
  std::string out;
  out += tag.aspect ? "A-" : "N-";
  out += tag.opinion ? "O-" : "N-";
  out += tag.sentiment ? std::string(to_string(*tag.sentiment)) : "N";
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const SpanTag& tag) {
  return os << to_string(tag);
}

}  // namespace spantag

#endif  // SPANTAG_CORE_HPP_
