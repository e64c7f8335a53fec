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

// Corpus statistics and tagging-scheme failure analysis.

#ifndef SPANTAG_ANALYSIS_HPP_
#define SPANTAG_ANALYSIS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spantag/codec.hpp"
#include "spantag/core.hpp"
#include "spantag/corpus.hpp"
#include "spantag/infer.hpp"
#include "spantag/metrics.hpp"
#include "spantag/parallel.hpp"

namespace spantag {

// Which of the three roles a 3D cell carries; S is any sentiment.
enum class RoleClass { kANN, kNON, kNNS, kAON, kANS, kNOS, kAOS };

inline constexpr RoleClass kAllRoleClasses[] = {
    RoleClass::kANN, RoleClass::kNON, RoleClass::kNNS, RoleClass::kAON,
    RoleClass::kANS, RoleClass::kNOS, RoleClass::kAOS};

inline std::string_view to_string(RoleClass c) {
  switch (c) {
    case RoleClass::kANN: return "A-N-N";
    case RoleClass::kNON: return "N-O-N";
    case RoleClass::kNNS: return "N-N-S";
    case RoleClass::kAON: return "A-O-N";
    case RoleClass::kANS: return "A-N-S";
    case RoleClass::kNOS: return "N-O-S";
    case RoleClass::kAOS: return "A-O-S";
  }
  return "?";
}

// `tag` must not be N-N-N.
inline RoleClass classify(const SpanTag& tag) {
  const bool s = tag.sentiment.has_value();
  if (tag.aspect && tag.opinion) return s ? RoleClass::kAOS : RoleClass::kAON;
  if (tag.aspect) return s ? RoleClass::kANS : RoleClass::kANN;
  if (tag.opinion) return s ? RoleClass::kNOS : RoleClass::kNON;
  if (s) return RoleClass::kNNS;
  throw Error("N-N-N cell has no role class");
}

struct RoleDistribution {
  std::array<std::size_t, 7> counts{};

  std::size_t& operator[](RoleClass c) { return counts[static_cast<int>(c)]; }
  std::size_t operator[](RoleClass c) const {
    return counts[static_cast<int>(c)];
  }
  std::size_t total() const {
    std::size_t sum = 0;
    for (std::size_t c : counts) sum += c;
    return sum;
  }
  RoleDistribution& operator+=(const RoleDistribution& other) {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += other.counts[k];
    return *this;
  }
  friend bool operator==(const RoleDistribution&,
                         const RoleDistribution&) = default;
};

inline RoleDistribution role_distribution(const TagTable& table3d) {
  RoleDistribution dist;
  for (const auto& [span, tag] : table3d.cells()) ++dist[classify(tag)];
  return dist;
}

inline RoleDistribution role_distribution(const CorpusSplit& split,
                                          int jobs = 1) {
  auto per_sentence = parallel_map(split.size(), jobs, [&](std::size_t k) {
    return role_distribution(
        encode(split.sentences[k], split.gold[k], Scheme::kThreeD).table);
  });
  RoleDistribution total;
  for (const RoleDistribution& d : per_sentence) total += d;
  return total;
}

struct CountStats {
  std::size_t sentences = 0;
  std::size_t triplets = 0;
  std::size_t pos = 0;
  std::size_t neu = 0;
  std::size_t neg = 0;

  friend bool operator==(const CountStats&, const CountStats&) = default;
};

inline CountStats sentiment_and_count_stats(const CorpusSplit& split) {
  CountStats stats;
  stats.sentences = split.size();
  for (const TripletList& gold : split.gold) {
    for (const Triplet& t : gold) {
      ++stats.triplets;
      switch (t.sentiment) {
        case Sentiment::kPos: ++stats.pos; break;
        case Sentiment::kNeu: ++stats.neu; break;
        case Sentiment::kNeg: ++stats.neg; break;
      }
    }
  }
  return stats;
}

struct SettingCounts {
  std::size_t single = 0;
  std::size_t multi = 0;
  std::size_t multi_aspect = 0;
  std::size_t multi_opinion = 0;

  friend bool operator==(const SettingCounts&, const SettingCounts&) = default;
};

inline SettingCounts setting_counts(const CorpusSplit& split) {
  SettingCounts counts;
  for (const TripletList& gold : split.gold) {
    for (const Triplet& t : gold) {
      counts.single += in_setting(t, Setting::kSingle);
      counts.multi += in_setting(t, Setting::kMulti);
      counts.multi_aspect += in_setting(t, Setting::kMultiAspect);
      counts.multi_opinion += in_setting(t, Setting::kMultiOpinion);
    }
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Failure analysis.

enum class LimitationCause {
  kNested,
  kConflict,
  kGreedy,
  kMultiRoleAON,
  kMultiRoleAorOP,
  kMultiRoleAOP,
};

inline constexpr LimitationCause kAllCauses[] = {
    LimitationCause::kNested,       LimitationCause::kConflict,
    LimitationCause::kGreedy,       LimitationCause::kMultiRoleAON,
    LimitationCause::kMultiRoleAorOP, LimitationCause::kMultiRoleAOP};

inline std::string_view to_string(LimitationCause c) {
  switch (c) {
    case LimitationCause::kNested: return "Nested";
    case LimitationCause::kConflict: return "Conflict";
    case LimitationCause::kGreedy: return "Greedy";
    case LimitationCause::kMultiRoleAON: return "MultiRoleAON";
    case LimitationCause::kMultiRoleAorOP: return "MultiRoleAorOP";
    case LimitationCause::kMultiRoleAOP: return "MultiRoleAOP";
  }
  return "?";
}

struct LimitationRecord {
  std::string sentence_id;
  Triplet triplet;
  LimitationCause cause = LimitationCause::kGreedy;
  Scheme scheme = Scheme::kThreeD;

  friend bool operator==(const LimitationRecord&,
                         const LimitationRecord&) = default;
};

struct LimitationReport {
  Scheme scheme = Scheme::kThreeD;
  std::size_t total_triplets = 0;
  std::vector<LimitationRecord> records;

  std::size_t failures() const { return records.size(); }
  std::size_t count(LimitationCause cause) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(),
                      [cause](const LimitationRecord& r) {
                        return r.cause == cause;
                      }));
  }
};

namespace detail {

inline LimitationCause multi_role_cause(const SpanTag& tag3d) {
  switch (classify(tag3d)) {
    case RoleClass::kAON: return LimitationCause::kMultiRoleAON;
    case RoleClass::kAOS: return LimitationCause::kMultiRoleAOP;
    default: return LimitationCause::kMultiRoleAorOP;
  }
}

// Cause for one unrecovered gold triplet, first match in the order
// Nested, Conflict, MultiRole*, Greedy.
inline LimitationCause classify_failure(const Triplet& t,
                                        const TripletList& gold,
                                        const TagTable& table3d,
                                        const TagTable& reduced) {
  if (relation(t.aspect, t.opinion) == SpanRelation::kNestedNoSharedBoundary) {
    return LimitationCause::kNested;
  }
  const Span snippet = snippet_of(t);
  const auto sharing = std::count_if(
      gold.begin(), gold.end(),
      [&](const Triplet& g) { return snippet_of(g) == snippet; });
  if (sharing >= 2) return LimitationCause::kConflict;

  if (reduced.scheme() != Scheme::kThreeD) {
    // A role of this triplet that the reduction dropped.
    const SpanTag a3 = table3d.at(t.aspect), a = reduced.at(t.aspect);
    if (a3.aspect && !a.aspect) return multi_role_cause(a3);
    const SpanTag o3 = table3d.at(t.opinion), o = reduced.at(t.opinion);
    if (o3.opinion && !o.opinion) return multi_role_cause(o3);
    const SpanTag s3 = table3d.at(snippet), s = reduced.at(snippet);
    if (s3.sentiment && !s.sentiment) return multi_role_cause(s3);
    // Otherwise a collapsed cell the triplet touches.
    for (const Span& cell : {t.aspect, t.opinion, snippet}) {
      const SpanTag tag = table3d.at(cell);
      if (!is_expressible(tag, reduced.scheme())) return multi_role_cause(tag);
    }
  }
  return LimitationCause::kGreedy;
}

}  // namespace detail

// Gold triplets of one sentence that do not survive encode -> greedy_decode
// under `scheme`, with their causes.
inline std::vector<LimitationRecord> sentence_limitations(
    const Sentence& sentence, const TripletList& gold, Scheme scheme) {
  const Encoding full = encode(sentence, gold, Scheme::kThreeD);
  const Encoding reduced =
      scheme == Scheme::kThreeD ? full : encode(sentence, gold, scheme);
  TripletList decoded = greedy_decode(reduced.table).triplets;
  std::sort(decoded.begin(), decoded.end());

  std::vector<LimitationRecord> records;
  for (const Triplet& t : gold) {
    if (std::binary_search(decoded.begin(), decoded.end(), t)) continue;
    records.push_back(LimitationRecord{
        sentence.id(), t,
        detail::classify_failure(t, gold, full.table, reduced.table), scheme});
  }
  return records;
}

inline LimitationReport limitation_report(const CorpusSplit& split,
                                          Scheme scheme, int jobs = 1) {
  auto per_sentence = parallel_map(split.size(), jobs, [&](std::size_t k) {
    return sentence_limitations(split.sentences[k], split.gold[k], scheme);
  });
  LimitationReport report;
  report.scheme = scheme;
  for (const TripletList& gold : split.gold) report.total_triplets += gold.size();
  for (auto& records : per_sentence) {
    report.records.insert(report.records.end(), records.begin(), records.end());
  }
  return report;
}

}  // namespace spantag

#endif  // SPANTAG_ANALYSIS_HPP_
