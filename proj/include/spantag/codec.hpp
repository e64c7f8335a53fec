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

// Triplet <-> span tag table encoding.
//
// A 3D table tags every span along three independent role dimensions. The
// 2D variant merges the aspect and opinion dimensions, the 1D variant merges
// all three. When a reduced scheme cannot hold every role of a cell, the
// winner is chosen by the fixed collision priority
//
//     sentiment  >  A  >  O
//
// and each lossy cell is reported as an EncodingIncident.

#ifndef SPANTAG_CODEC_HPP_
#define SPANTAG_CODEC_HPP_

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spantag/core.hpp"
#include "spantag/span_table.hpp"

namespace spantag {

inline constexpr std::string_view kCollisionPriority = "sentiment > A > O";

enum class IncidentKind { kSentimentConflict, kRoleCollision2D, kRoleCollision1D };

inline std::string_view to_string(IncidentKind k) {
  switch (k) {
    case IncidentKind::kSentimentConflict: return "SentimentConflict";
    case IncidentKind::kRoleCollision2D: return "RoleCollision2D";
    case IncidentKind::kRoleCollision1D: return "RoleCollision1D";
  }
  return "?";
}

// A fact the chosen scheme could not store. `triplet` names the gold triplet
// whose role was dropped; incidents raised by a bare `project` on a table
// have none.
struct EncodingIncident {
  std::string sentence_id;
  std::optional<Triplet> triplet;
  IncidentKind kind = IncidentKind::kSentimentConflict;
  Span losing_span;
  std::string note;

  friend bool operator==(const EncodingIncident&,
                         const EncodingIncident&) = default;
};

struct Encoding {
  TagTable table;
  std::vector<EncodingIncident> incidents;
};

// Whether `tag` can be written under `scheme` without losing a role.
constexpr bool is_expressible(const SpanTag& tag, Scheme scheme) {
  switch (scheme) {
    case Scheme::kThreeD: return true;
    case Scheme::kTwoD: return !(tag.aspect && tag.opinion);
    case Scheme::kOneD: return tag.active_roles() <= 1;
  }
  return false;
}

// Applies the collision priority to one cell.
constexpr SpanTag reduce_tag(SpanTag tag, Scheme scheme) {
  switch (scheme) {
    case Scheme::kThreeD:
      break;
    case Scheme::kTwoD:
      if (tag.aspect && tag.opinion) tag.opinion = false;
      break;
    case Scheme::kOneD:
      if (tag.sentiment) {
        tag.aspect = false;
        tag.opinion = false;
      } else if (tag.aspect && tag.opinion) {
        tag.opinion = false;
      }
      break;
  }
  return tag;
}

// Label text of a cell under `scheme`: 3D "A-N-POS", 2D "A-POS", 1D "POS".
// The tag must be expressible under the scheme.
inline std::string format_label(const SpanTag& tag, Scheme scheme) {
  if (!is_expressible(tag, scheme)) {
    throw Error("tag " + to_string(tag) + " is not expressible under scheme " +
                std::string(to_string(scheme)));
  }
  const std::string sentiment =
      tag.sentiment ? std::string(to_string(*tag.sentiment)) : "N";
  switch (scheme) {
    case Scheme::kThreeD:
      return to_string(tag);
    case Scheme::kTwoD: {
      const char* role = tag.aspect ? "A" : tag.opinion ? "O" : "N";
      return std::string(role) + "-" + sentiment;
    }
    case Scheme::kOneD:
      if (tag.aspect) return "A";
      if (tag.opinion) return "O";
      return sentiment;
  }
  return {};
}

// Inverse of format_label. Returns nullopt for labels outside the scheme's
// label set.
inline std::optional<SpanTag> parse_label(std::string_view label,
                                          Scheme scheme) {
  auto sentiment_field = [](std::string_view text, SpanTag& tag) {
    if (text == "N") return true;
    tag.sentiment = parse_sentiment(text);
    return tag.sentiment.has_value();
  };
  SpanTag tag;
  switch (scheme) {
    case Scheme::kThreeD: {
      if (label.size() < 5 || label[1] != '-' || label[3] != '-') {
        return std::nullopt;
      }
      if (label[0] == 'A') {
        tag.aspect = true;
      } else if (label[0] != 'N') {
        return std::nullopt;
      }
      if (label[2] == 'O') {
        tag.opinion = true;
      } else if (label[2] != 'N') {
        return std::nullopt;
      }
      if (!sentiment_field(label.substr(4), tag)) return std::nullopt;
      return tag;
    }
    case Scheme::kTwoD: {
      if (label.size() < 3 || label[1] != '-') return std::nullopt;
      if (label[0] == 'A') {
        tag.aspect = true;
      } else if (label[0] == 'O') {
        tag.opinion = true;
      } else if (label[0] != 'N') {
        return std::nullopt;
      }
      if (!sentiment_field(label.substr(2), tag)) return std::nullopt;
      return tag;
    }
    case Scheme::kOneD: {
      if (label == "A") {
        tag.aspect = true;
      } else if (label == "O") {
        tag.opinion = true;
      } else if (!sentiment_field(label, tag)) {
        return std::nullopt;
      }
      return tag;
    }
  }
  return std::nullopt;
}

namespace detail {

// Roles (as letters) present in `before` but gone from `after`.
inline std::string lost_roles(const SpanTag& before, const SpanTag& after) {
  std::string lost;
  if (before.aspect && !after.aspect) lost += 'A';
  if (before.opinion && !after.opinion) lost += 'O';
  if (before.sentiment && !after.sentiment) lost += 'S';
  return lost;
}

inline std::string collision_note(const SpanTag& before, const SpanTag& after,
                                  Scheme scheme) {
  std::string note = to_string(before) + " -> " + format_label(after, scheme);
  note += " (dropped " + lost_roles(before, after) + ")";
  return note;
}

}  // namespace detail

// Reduces a 3D table to `scheme`. One incident per cell the scheme cannot
// express.
inline Encoding project(const TagTable& table, Scheme scheme) {
  if (table.scheme() != Scheme::kThreeD) {
    throw Error("project expects a table with 3d semantics");
  }
  Encoding out{TagTable(table.sentence_id(), table.size(), scheme), {}};
  const IncidentKind kind = scheme == Scheme::kTwoD
                                ? IncidentKind::kRoleCollision2D
                                : IncidentKind::kRoleCollision1D;
  for (const auto& [span, tag] : table.cells()) {
    const SpanTag reduced = reduce_tag(tag, scheme);
    out.table.set(span, reduced);
    if (reduced != tag) {
      out.incidents.push_back(EncodingIncident{
          table.sentence_id(), std::nullopt, kind, span,
          detail::collision_note(tag, reduced, scheme)});
    }
  }
  return out;
}

namespace detail {

inline void check_expressible(const Span& span, const SpanTag& tag,
                              Scheme scheme) {
  if (!is_expressible(tag, scheme)) {
    std::ostringstream msg;
    msg << "cell " << span << " holds " << to_string(tag)
        << ", which is not a label of scheme " << to_string(scheme);
    throw Error(msg.str());
  }
}

inline void check_scheme(const TagTable& table, Scheme scheme) {
  if (table.scheme() != scheme) {
    throw Error("table '" + table.sentence_id() + "' is tagged " +
                std::string(to_string(table.scheme())) + ", expected " +
                std::string(to_string(scheme)));
  }
}

}  // namespace detail

// Throws unless `table` is tagged `scheme` and every cell is one of its
// labels.
inline void validate_for(const TagTable& table, Scheme scheme) {
  detail::check_scheme(table, scheme);
  for (const auto& [span, tag] : table.cells()) {
    detail::check_expressible(span, tag, scheme);
  }
}

// Reinterprets a `scheme` table with 3D semantics. Every cell must be a
// legal value of `scheme`.
inline TagTable lift(const TagTable& table, Scheme scheme) {
  validate_for(table, scheme);
  TagTable lifted = table;
  lifted.set_scheme(Scheme::kThreeD);
  return lifted;
}

// Encodes the gold triplets of one sentence. Triplets are applied in list
// order; on a sentiment clash at a shared snippet the first sentiment stays.
inline Encoding encode(const Sentence& sentence, const TripletList& gold,
                       Scheme scheme) {
  const int n = sentence.size();
  Encoding out{TagTable(sentence.id(), n, Scheme::kThreeD), {}};
  TagTable& table = out.table;

  // First triplet to claim each role of a cell, for incident attribution.
  struct Writers {
    std::optional<std::size_t> aspect, opinion, sentiment;
  };
  std::map<Span, Writers> writers;

  for (std::size_t idx = 0; idx < gold.size(); ++idx) {
    const Triplet& t = gold[idx];
    if (!t.aspect.valid_for(n) || !t.opinion.valid_for(n)) {
      std::ostringstream msg;
      msg << "triplet " << t << " out of range for sentence '"
          << sentence.id() << "' with " << n << " tokens";
      throw Error(msg.str());
    }
    if (t.aspect == t.opinion) {
      throw Error("triplet aspect and opinion spans must differ in sentence '" +
                  sentence.id() + "'");
    }

    SpanTag a = table.at(t.aspect);
    a.aspect = true;
    table.set(t.aspect, a);
    if (!writers[t.aspect].aspect) writers[t.aspect].aspect = idx;

    SpanTag o = table.at(t.opinion);
    o.opinion = true;
    table.set(t.opinion, o);
    if (!writers[t.opinion].opinion) writers[t.opinion].opinion = idx;

    const Span snippet = snippet_of(t);
    SpanTag s = table.at(snippet);
    if (!s.sentiment) {
      s.sentiment = t.sentiment;
      table.set(snippet, s);
      writers[snippet].sentiment = idx;
    } else if (*s.sentiment != t.sentiment) {
      out.incidents.push_back(EncodingIncident{
          sentence.id(), t, IncidentKind::kSentimentConflict, snippet,
          "kept " + std::string(to_string(*s.sentiment)) + ", dropped " +
              std::string(to_string(t.sentiment))});
    }
  }

  if (scheme == Scheme::kThreeD) return out;

  Encoding projected = project(table, scheme);
  for (EncodingIncident& incident : projected.incidents) {
    const SpanTag before = table.at(incident.losing_span);
    const SpanTag after = projected.table.at(incident.losing_span);
    const Writers& w = writers[incident.losing_span];
    std::optional<std::size_t> loser;
    if (before.sentiment && !after.sentiment) loser = w.sentiment;
    if (!loser && before.aspect && !after.aspect) loser = w.aspect;
    if (!loser && before.opinion && !after.opinion) loser = w.opinion;
    if (loser) incident.triplet = gold[*loser];
  }
  out.incidents.insert(out.incidents.end(), projected.incidents.begin(),
                       projected.incidents.end());
  out.table = std::move(projected.table);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const EncodingIncident& e) {
  os << e.sentence_id << ' ' << to_string(e.kind) << " span=" << e.losing_span;
  if (e.triplet) os << " triplet=" << *e.triplet;
  return os << " note=" << e.note;
}

}  // namespace spantag

#endif  // SPANTAG_CODEC_HPP_
