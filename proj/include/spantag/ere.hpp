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

// Span tagging over a user-declared schema of entity types and directed
// relations.
//
// Each span carries two sub-tags: an entity type (or N) and a relation
// snippet label (or N). A relation snippet is the boundary hull of its head
// and tail entities; its label R^(H-T) says the head comes first, R^(T-H)
// that the tail does. "First" compares (start, end) lexicographically, so a
// head and tail that share their start are told apart by their ends.
//
// Decoding reuses the greedy boundary retrieval of the triplet decoder. The
// direction replaces the two-ordering scan: H-T takes the head from the
// snippet's start and the tail from its end, T-H the reverse.
//
// Interchange form:
//
//   #schema entities=Task,Method relations=Used-for,Part-of
//   #table <sentence-id> <n> ere
//   <start> <end> <entity|N> <relation^H-T|relation^T-H|N>

#ifndef SPANTAG_ERE_HPP_
#define SPANTAG_ERE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "spantag/boundary_index.hpp"
#include "spantag/core.hpp"
#include "spantag/corpus.hpp"
#include "spantag/span_table.hpp"

namespace spantag {

class RoleSchema {
 public:
  RoleSchema() = default;
  RoleSchema(std::vector<std::string> entity_labels,
             std::vector<std::string> relation_labels)
      : entity_labels_(std::move(entity_labels)),
        relation_labels_(std::move(relation_labels)) {
    check_labels(entity_labels_, "entity");
    check_labels(relation_labels_, "relation");
  }

  const std::vector<std::string>& entity_labels() const {
    return entity_labels_;
  }
  const std::vector<std::string>& relation_labels() const {
    return relation_labels_;
  }

  std::optional<int> entity_index(std::string_view label) const {
    return find(entity_labels_, label);
  }
  std::optional<int> relation_index(std::string_view label) const {
    return find(relation_labels_, label);
  }

  // Size of the relation-snippet dimension, N included.
  std::size_t relation_tag_count() const {
    return 2 * relation_labels_.size() + 1;
  }

  friend bool operator==(const RoleSchema&, const RoleSchema&) = default;

 private:
  static void check_labels(const std::vector<std::string>& labels,
                           const char* what) {
    std::set<std::string> seen;
    for (const std::string& label : labels) {
      if (label.empty() || label == "N" ||
          label.find_first_of(" \t\r\n,^=") != std::string::npos) {
        throw Error(std::string("invalid ") + what + " label '" + label + "'");
      }
      if (!seen.insert(label).second) {
        throw Error(std::string("duplicate ") + what + " label '" + label + "'");
      }
    }
  }
  static std::optional<int> find(const std::vector<std::string>& labels,
                                 std::string_view label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) return std::nullopt;
    return static_cast<int>(it - labels.begin());
  }

  std::vector<std::string> entity_labels_;
  std::vector<std::string> relation_labels_;
};

enum class Direction { kHeadTail, kTailHead };

inline std::string_view to_string(Direction d) {
  return d == Direction::kHeadTail ? "H-T" : "T-H";
}

struct DirectedRelation {
  int relation = 0;
  Direction direction = Direction::kHeadTail;
  friend bool operator==(const DirectedRelation&,
                         const DirectedRelation&) = default;
};

struct RelationCell {
  std::optional<int> entity;
  std::optional<DirectedRelation> relation;

  bool is_default() const { return !entity && !relation; }
  friend bool operator==(const RelationCell&, const RelationCell&) = default;
};

using RelationTable = SpanTable<RelationCell>;

struct Entity {
  Span span;
  std::string label;
  friend auto operator<=>(const Entity&, const Entity&) = default;
};

struct RelationTriplet {
  Entity head;
  Entity tail;
  std::string relation;

  Direction direction() const {
    return head.span < tail.span ? Direction::kHeadTail : Direction::kTailHead;
  }
  friend auto operator<=>(const RelationTriplet&,
                          const RelationTriplet&) = default;
};

enum class RelationIncidentKind { kEntityLabelConflict, kRelationConflict };

struct RelationIncident {
  std::string sentence_id;
  RelationIncidentKind kind = RelationIncidentKind::kEntityLabelConflict;
  Span span;
  std::string note;
};

struct RelationEncoding {
  RelationTable table;
  std::vector<RelationIncident> incidents;
};

inline RelationEncoding encode_relations(
    const Sentence& sentence, const std::vector<Entity>& entities,
    const std::vector<RelationTriplet>& relations, const RoleSchema& schema) {
  const int n = sentence.size();
  RelationEncoding out{RelationTable(sentence.id(), n), {}};
  RelationTable& table = out.table;

  auto require_span = [&](const Span& s) {
    if (!s.valid_for(n)) {
      std::ostringstream msg;
      msg << "span " << s << " out of range for sentence '" << sentence.id()
          << "'";
      throw Error(msg.str());
    }
  };

  for (const Entity& e : entities) {
    require_span(e.span);
    const auto label = schema.entity_index(e.label);
    if (!label) throw Error("entity label '" + e.label + "' not in schema");
    RelationCell cell = table.at(e.span);
    if (!cell.entity) {
      cell.entity = *label;
      table.set(e.span, cell);
    } else if (*cell.entity != *label) {
      out.incidents.push_back(RelationIncident{
          sentence.id(), RelationIncidentKind::kEntityLabelConflict, e.span,
          "kept " + schema.entity_labels()[*cell.entity] + ", dropped " +
              e.label});
    }
  }

  for (const RelationTriplet& r : relations) {
    for (const Entity* end : {&r.head, &r.tail}) {
      if (std::find(entities.begin(), entities.end(), *end) == entities.end()) {
        throw Error("relation endpoint '" + end->label +
                    "' is not a declared entity");
      }
    }
    if (r.head.span == r.tail.span) {
      throw Error("relation head and tail cover the same span");
    }
    const auto rel = schema.relation_index(r.relation);
    if (!rel) throw Error("relation label '" + r.relation + "' not in schema");
    const Span snippet(std::min(r.head.span.start, r.tail.span.start),
                       std::max(r.head.span.end, r.tail.span.end));
    const DirectedRelation tag{*rel, r.direction()};
    RelationCell cell = table.at(snippet);
    if (!cell.relation) {
      cell.relation = tag;
      table.set(snippet, cell);
    } else if (*cell.relation != tag) {
      const DirectedRelation& kept = *cell.relation;
      out.incidents.push_back(RelationIncident{
          sentence.id(), RelationIncidentKind::kRelationConflict, snippet,
          "kept " + schema.relation_labels()[kept.relation] + "^" +
              std::string(to_string(kept.direction)) + ", dropped " +
              r.relation + "^" + std::string(to_string(tag.direction))});
    }
  }
  return out;
}

// Sorted output; a pairing whose head equals its tail is dropped.
inline std::vector<RelationTriplet> decode_relations(const RelationTable& table,
                                                     const RoleSchema& schema) {
  std::vector<Span> entity_spans;
  for (const auto& [span, cell] : table.cells()) {
    if (cell.entity) {
      if (*cell.entity < 0 ||
          *cell.entity >= static_cast<int>(schema.entity_labels().size())) {
        throw Error("entity tag outside the schema");
      }
      entity_spans.push_back(span);
    }
  }
  const BoundaryIndex entities(table.size(), entity_spans);
  const auto label_of = [&](const Span& s) {
    return schema.entity_labels()[*table.at(s).entity];
  };

  std::vector<RelationTriplet> out;
  for (const auto& [snippet, cell] : table.cells()) {
    if (!cell.relation) continue;
    const DirectedRelation& rel = *cell.relation;
    if (rel.relation < 0 ||
        rel.relation >= static_cast<int>(schema.relation_labels().size())) {
      throw Error("relation tag outside the schema");
    }
    const int i = snippet.start;
    const int j = snippet.end;
    const auto k = entities.longest_from_start(i, j);
    const auto l = entities.longest_to_end(i, j);
    if (!k || !l) continue;
    const Span lead(i, *k);
    const Span trail(*l, j);
    if (lead == trail) continue;
    const Span head = rel.direction == Direction::kHeadTail ? lead : trail;
    const Span tail = rel.direction == Direction::kHeadTail ? trail : lead;
    out.push_back(RelationTriplet{Entity{head, label_of(head)},
                                  Entity{tail, label_of(tail)},
                                  schema.relation_labels()[rel.relation]});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Triplet extraction expressed as a schema: entities A and O, one relation
// per polarity, head = aspect, tail = opinion.

inline RoleSchema triplet_schema() {
  return RoleSchema({"A", "O"}, {"POS", "NEU", "NEG"});
}

inline std::pair<std::vector<Entity>, std::vector<RelationTriplet>>
triplets_as_relations(const TripletList& gold) {
  std::vector<Entity> entities;
  std::vector<RelationTriplet> relations;
  auto add = [&entities](const Entity& e) {
    if (std::find(entities.begin(), entities.end(), e) == entities.end()) {
      entities.push_back(e);
    }
  };
  for (const Triplet& t : gold) {
    const Entity aspect{t.aspect, "A"};
    const Entity opinion{t.opinion, "O"};
    add(aspect);
    add(opinion);
    relations.push_back(
        RelationTriplet{aspect, opinion, std::string(to_string(t.sentiment))});
  }
  return {entities, relations};
}

inline TripletList relations_as_triplets(
    const std::vector<RelationTriplet>& relations) {
  TripletList out;
  for (const RelationTriplet& r : relations) {
    const auto sentiment = parse_sentiment(r.relation);
    if (!sentiment) continue;
    out.push_back(Triplet{r.head.span, r.tail.span, *sentiment});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Interchange.

inline std::string format_relation_tables(
    const RoleSchema& schema, const std::vector<RelationTable>& tables) {
  auto join = [](const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (k) out += ',';
      out += labels[k];
    }
    return out;
  };
  std::string out = "#schema entities=" + join(schema.entity_labels()) +
                    " relations=" + join(schema.relation_labels()) + "\n";
  for (const RelationTable& table : tables) {
    out += "#table " + table.sentence_id() + " " + std::to_string(table.size()) +
           " ere\n";
    for (const auto& [span, cell] : table.cells()) {
      out += std::to_string(span.start) + " " + std::to_string(span.end) + " ";
      out += cell.entity ? schema.entity_labels()[*cell.entity] : "N";
      out += ' ';
      if (cell.relation) {
        out += schema.relation_labels()[cell.relation->relation] + "^" +
               std::string(to_string(cell.relation->direction));
      } else {
        out += 'N';
      }
      out += '\n';
    }
    out += '\n';
  }
  if (!tables.empty()) out.pop_back();
  return out;
}

inline std::pair<RoleSchema, std::vector<RelationTable>> parse_relation_tables(
    std::string_view text, const std::string& source) {
  const auto lines = detail::split_lines(text);
  std::vector<ParseIssue> issues;
  std::optional<RoleSchema> schema;
  std::vector<RelationTable> tables;
  std::set<std::string> seen_ids;
  bool in_table = false;

  auto split_list = [](std::string_view list) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= list.size() && !list.empty()) {
      std::size_t comma = list.find(',', pos);
      if (comma == std::string_view::npos) comma = list.size();
      out.emplace_back(list.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return out;
  };

  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t line_no = k + 1;
    auto issue = [&](std::string message) {
      issues.push_back(ParseIssue{line_no, std::move(message)});
    };
    const std::string_view line = lines[k];
    if (line.empty()) {
      in_table = false;
      continue;
    }
    const auto fields = detail::split_fields(line);
    if (fields[0] == "#schema") {
      constexpr std::string_view kEnt = "entities=", kRel = "relations=";
      if (schema || fields.size() != 3 || fields[1].substr(0, kEnt.size()) != kEnt ||
          fields[2].substr(0, kRel.size()) != kRel) {
        issue("malformed or repeated '#schema entities=... relations=...'");
        continue;
      }
      try {
        schema = RoleSchema(split_list(fields[1].substr(kEnt.size())),
                            split_list(fields[2].substr(kRel.size())));
      } catch (const Error& e) {
        issue(e.what());
      }
      continue;
    }
    if (fields[0] == "#table") {
      in_table = false;
      int n = 0;
      if (!schema) {
        issue("table before '#schema' header");
        continue;
      }
      if (fields.size() != 4 || !detail::parse_int(fields[2], n) || n < 1 ||
          fields[3] != "ere") {
        issue("malformed header, expected '#table <id> <n> ere'");
        continue;
      }
      if (!seen_ids.insert(std::string(fields[1])).second) {
        issue("duplicate table for sentence '" + std::string(fields[1]) + "'");
        continue;
      }
      tables.emplace_back(std::string(fields[1]), n);
      in_table = true;
      continue;
    }
    if (!in_table) {
      issue("cell line outside a table");
      continue;
    }
    RelationTable& table = tables.back();
    int start = 0, end = 0;
    if (fields.size() != 4 || !detail::parse_int(fields[0], start) ||
        !detail::parse_int(fields[1], end)) {
      issue("malformed cell, expected '<start> <end> <entity> <relation>'");
      continue;
    }
    const Span span(start, end);
    if (!span.valid_for(table.size())) {
      issue("span out of range");
      continue;
    }
    RelationCell cell;
    if (fields[2] != "N") {
      cell.entity = schema->entity_index(fields[2]);
      if (!cell.entity) {
        issue("entity label '" + std::string(fields[2]) + "' not in schema");
        continue;
      }
    }
    if (fields[3] != "N") {
      const std::size_t caret = fields[3].rfind('^');
      const std::string_view dir =
          caret == std::string_view::npos ? "" : fields[3].substr(caret + 1);
      const auto rel = caret == std::string_view::npos
                           ? std::nullopt
                           : schema->relation_index(fields[3].substr(0, caret));
      if (!rel || (dir != "H-T" && dir != "T-H")) {
        issue("relation label '" + std::string(fields[3]) + "' not in schema");
        continue;
      }
      cell.relation = DirectedRelation{
          *rel, dir == "H-T" ? Direction::kHeadTail : Direction::kTailHead};
    }
    if (cell.is_default()) {
      issue("default label must not be listed");
      continue;
    }
    if (table.has_cell(span)) {
      issue("duplicate cell");
      continue;
    }
    table.set(span, cell);
  }
  if (!schema && issues.empty() && !lines.empty()) {
    issues.push_back(ParseIssue{1, "missing '#schema' header"});
  }
  if (!issues.empty()) throw ParseError(source, std::move(issues));
  return {schema.value_or(RoleSchema{}), std::move(tables)};
}

}  // namespace spantag

#endif  // SPANTAG_ERE_HPP_
