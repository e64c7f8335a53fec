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

#ifndef SPANTAG_METRICS_HPP_
#define SPANTAG_METRICS_HPP_

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spantag/core.hpp"

namespace spantag {

// Triplet sets keyed by sentence id.
using TripletsById = std::map<std::string, TripletList>;

// Micro-averaged exact-match score. Every ratio with a zero denominator is 0.
struct Score {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t true_positives = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;

  static Score from_counts(std::size_t tp, std::size_t predicted,
                           std::size_t gold) {
    Score s;
    s.true_positives = tp;
    s.predicted = predicted;
    s.gold = gold;
    s.precision = predicted == 0 ? 0.0 : static_cast<double>(tp) / predicted;
    s.recall = gold == 0 ? 0.0 : static_cast<double>(tp) / gold;
    const double sum = s.precision + s.recall;
    s.f1 = sum == 0.0 ? 0.0 : 2.0 * s.precision * s.recall / sum;
    return s;
  }
};

enum class Subtask { kAste, kAte, kOte, kAope };

inline std::string_view to_string(Subtask t) {
  switch (t) {
    case Subtask::kAste: return "ASTE";
    case Subtask::kAte: return "ATE";
    case Subtask::kOte: return "OTE";
    case Subtask::kAope: return "AOPE";
  }
  return "?";
}

enum class Setting { kSingle, kMulti, kMultiAspect, kMultiOpinion, kAll };

inline constexpr Setting kAllSettings[] = {Setting::kSingle, Setting::kMulti,
                                           Setting::kMultiAspect,
                                           Setting::kMultiOpinion,
                                           Setting::kAll};

inline std::string_view to_string(Setting s) {
  switch (s) {
    case Setting::kSingle: return "Single";
    case Setting::kMulti: return "Multi";
    case Setting::kMultiAspect: return "MultiAspect";
    case Setting::kMultiOpinion: return "MultiOpinion";
    case Setting::kAll: return "All";
  }
  return "?";
}

constexpr bool in_setting(const Triplet& t, Setting s) {
  const bool long_aspect = t.aspect.length() > 1;
  const bool long_opinion = t.opinion.length() > 1;
  switch (s) {
    case Setting::kSingle: return !long_aspect && !long_opinion;
    case Setting::kMulti: return long_aspect || long_opinion;
    case Setting::kMultiAspect: return long_aspect;
    case Setting::kMultiOpinion: return long_opinion;
    case Setting::kAll: return true;
  }
  return false;
}

namespace detail {

inline void check_same_ids(const TripletsById& pred, const TripletsById& gold) {
  std::vector<std::string> only_pred, only_gold;
  auto key = [](const auto& kv) { return kv.first; };
  std::vector<std::string> p, g;
  std::transform(pred.begin(), pred.end(), std::back_inserter(p), key);
  std::transform(gold.begin(), gold.end(), std::back_inserter(g), key);
  std::set_difference(p.begin(), p.end(), g.begin(), g.end(),
                      std::back_inserter(only_pred));
  std::set_difference(g.begin(), g.end(), p.begin(), p.end(),
                      std::back_inserter(only_gold));
  if (only_pred.empty() && only_gold.empty()) return;
  auto join = [](const std::vector<std::string>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size() && i < 10; ++i) {
      if (i) out += ',';
      out += ids[i];
    }
    if (ids.size() > 10) out += ",...";
    return out;
  };
  throw Error("sentence ids differ between prediction and gold: only in "
              "prediction [" + join(only_pred) + "], only in gold [" +
              join(only_gold) + "]");
}

// Micro exact-match over a per-sentence projection. `project` maps a triplet
// list to the keys being matched; duplicates after projection count once.
template <typename Project>
Score score_projected(const TripletsById& pred, const TripletsById& gold,
                      Project project) {
  check_same_ids(pred, gold);
  std::size_t tp = 0, n_pred = 0, n_gold = 0;
  auto p_it = pred.begin();
  for (auto g_it = gold.begin(); g_it != gold.end(); ++g_it, ++p_it) {
    auto p_keys = project(p_it->second);
    auto g_keys = project(g_it->second);
    std::sort(p_keys.begin(), p_keys.end());
    p_keys.erase(std::unique(p_keys.begin(), p_keys.end()), p_keys.end());
    std::sort(g_keys.begin(), g_keys.end());
    g_keys.erase(std::unique(g_keys.begin(), g_keys.end()), g_keys.end());
    std::vector<typename decltype(p_keys)::value_type> common;
    std::set_intersection(p_keys.begin(), p_keys.end(), g_keys.begin(),
                          g_keys.end(), std::back_inserter(common));
    tp += common.size();
    n_pred += p_keys.size();
    n_gold += g_keys.size();
  }
  return Score::from_counts(tp, n_pred, n_gold);
}

}  // namespace detail

inline Score score_triplets(const TripletsById& pred,
                            const TripletsById& gold) {
  return detail::score_projected(pred, gold,
                                 [](const TripletList& l) { return l; });
}

inline Score score_subtask(const TripletsById& pred, const TripletsById& gold,
                           Subtask task) {
  switch (task) {
    case Subtask::kAste:
      return score_triplets(pred, gold);
    case Subtask::kAte:
    case Subtask::kOte:
      return detail::score_projected(pred, gold, [task](const TripletList& l) {
        std::vector<Span> spans;
        for (const Triplet& t : l) {
          spans.push_back(task == Subtask::kAte ? t.aspect : t.opinion);
        }
        return spans;
      });
    case Subtask::kAope:
      return detail::score_projected(pred, gold, [](const TripletList& l) {
        std::vector<std::pair<Span, Span>> pairs;
        for (const Triplet& t : l) pairs.emplace_back(t.aspect, t.opinion);
        return pairs;
      });
  }
  return {};
}

// Filters prediction and gold alike to the setting, then scores triplets.
inline Score score_by_setting(const TripletsById& pred,
                              const TripletsById& gold, Setting setting) {
  return detail::score_projected(pred, gold, [setting](const TripletList& l) {
    TripletList kept;
    for (const Triplet& t : l) {
      if (in_setting(t, setting)) kept.push_back(t);
    }
    return kept;
  });
}

}  // namespace spantag

#endif  // SPANTAG_METRICS_HPP_
