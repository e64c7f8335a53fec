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

// Batch commands behind the `spantag` tool. Each returns a process exit
// code and writes its report to `out` and diagnostics to `err`.

#ifndef SPANTAG_COMMANDS_HPP_
#define SPANTAG_COMMANDS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spantag/analysis.hpp"
#include "spantag/codec.hpp"
#include "spantag/core.hpp"
#include "spantag/corpus.hpp"
#include "spantag/infer.hpp"
#include "spantag/metrics.hpp"
#include "spantag/parallel.hpp"
#include "spantag/report.hpp"

namespace spantag {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitMismatch = 3,
};

struct RunOptions {
  Scheme scheme = Scheme::kThreeD;
  ReportFormat format = ReportFormat::kText;
  int jobs = 1;
};

namespace detail {

// Maps library errors onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

inline std::string triplet_kv(const Triplet& t) {
  std::ostringstream os;
  os << "a=" << t.aspect.start << ',' << t.aspect.end << " o=" << t.opinion.start
     << ',' << t.opinion.end << " s=" << t.sentiment;
  return os.str();
}

}  // namespace detail

// corpus -> tag tables, plus an incident log at `incidents_path`.
inline int cmd_encode(const std::string& corpus_path,
                      const std::string& out_path,
                      const std::string& incidents_path,
                      const RunOptions& opts, std::ostream& out,
                      std::ostream& err) {
  return detail::guarded(err, [&] {
    const CorpusSplit split = read_corpus(corpus_path);
    auto encoded = parallel_map(split.size(), opts.jobs, [&](std::size_t k) {
      return encode(split.sentences[k], split.gold[k], opts.scheme);
    });
    std::vector<TagTable> tables;
    std::size_t cells = 0;
    std::string log = "# scheme=" + std::string(to_string(opts.scheme)) +
                      " collision-priority=" + std::string(kCollisionPriority) +
                      "\n";
    std::size_t incident_count = 0;
    for (const Encoding& e : encoded) {
      cells += e.table.cell_count();
      tables.push_back(e.table);
      for (const EncodingIncident& inc : e.incidents) {
        std::ostringstream line;
        line << "id=" << inc.sentence_id << " kind=" << to_string(inc.kind)
             << " span=" << inc.losing_span.start << ',' << inc.losing_span.end;
        if (inc.triplet) line << ' ' << detail::triplet_kv(*inc.triplet);
        line << " note=" << inc.note << '\n';
        log += line.str();
        ++incident_count;
      }
    }
    write_tagtables(tables, out_path);
    detail::write_file(incidents_path, log);
    out << "encoded " << split.size() << " sentences into " << cells
        << " cells under scheme " << to_string(opts.scheme) << "; "
        << incident_count << " incidents (collision priority "
        << kCollisionPriority << ")\n";
    if (split.duplicates_removed) {
      err << "warning: dropped " << split.duplicates_removed
          << " duplicate gold triplets\n";
    }
    return kExitOk;
  });
}

// tag tables -> corpus-format triplet file. With `corpus_path`, tokens are
// copied from the corpus; otherwise every token is written as "_".
inline int cmd_decode(const std::string& tables_path,
                      const std::string& out_path,
                      const std::optional<std::string>& corpus_path,
                      const RunOptions& opts, std::ostream& out,
                      std::ostream& err) {
  return detail::guarded(err, [&] {
    const std::vector<TagTable> tables = read_tagtables(tables_path);
    std::map<std::string, const TagTable*> by_id;
    for (const TagTable& t : tables) by_id[t.sentence_id()] = &t;

    std::vector<Sentence> sentences;
    std::vector<const TagTable*> order;
    if (corpus_path) {
      const CorpusSplit split = read_corpus(*corpus_path);
      for (const Sentence& s : split.sentences) {
        auto it = by_id.find(s.id());
        if (it == by_id.end()) {
          throw Error("no tag table for sentence '" + s.id() + "'");
        }
        if (it->second->size() != s.size()) {
          throw Error("table '" + s.id() + "' has n=" +
                      std::to_string(it->second->size()) + " but the sentence has " +
                      std::to_string(s.size()) + " tokens");
        }
        sentences.push_back(s);
        order.push_back(it->second);
      }
      if (by_id.size() != split.size()) {
        throw Error("tag table file has tables for sentences not in the corpus");
      }
    } else {
      for (std::size_t k = 0; k < tables.size(); ++k) {
        if (tables[k].sentence_id() != std::to_string(k + 1)) {
          throw Error("table " + std::to_string(k + 1) + " has id '" +
                      tables[k].sentence_id() +
                      "'; pass --corpus to decode tables out of line order");
        }
        sentences.emplace_back(
            tables[k].sentence_id(),
            std::vector<std::string>(static_cast<std::size_t>(tables[k].size()),
                                     "_"));
        order.push_back(&tables[k]);
      }
    }

    auto decoded = parallel_map(order.size(), opts.jobs, [&](std::size_t k) {
      return greedy_decode(*order[k], opts.scheme);
    });
    std::string text;
    std::size_t triplets = 0, suppressed = 0;
    for (std::size_t k = 0; k < decoded.size(); ++k) {
      text += format_v2_line(sentences[k], decoded[k].triplets) + "\n";
      triplets += decoded[k].triplets.size();
      suppressed += decoded[k].suppressed.size();
      for (const Span& s : decoded[k].suppressed) {
        err << "note: sentence " << sentences[k].id() << " snippet " << s
            << " paired with itself; dropped\n";
      }
    }
    detail::write_file(out_path, text);
    out << "decoded " << decoded.size() << " tables into " << triplets
        << " triplets";
    if (suppressed) out << " (" << suppressed << " self-pairings dropped)";
    out << '\n';
    return kExitOk;
  });
}

inline int cmd_score(const std::string& pred_path, const std::string& gold_path,
                     bool breakdown, const RunOptions& opts, std::ostream& out,
                     std::ostream& err) {
  return detail::guarded(err, [&] {
    const CorpusSplit pred = read_corpus(pred_path);
    const CorpusSplit gold = read_corpus(gold_path);
    for (std::size_t k = 0; k < std::min(pred.size(), gold.size()); ++k) {
      if (pred.sentences[k].size() != gold.sentences[k].size()) {
        throw Error("sentence " + gold.sentences[k].id() +
                    " has different token counts in prediction and gold");
      }
    }
    const TripletsById p = pred.gold_by_id();
    const TripletsById g = gold.gold_by_id();

    struct Row {
      std::string name;
      Score score;
    };
    std::vector<Row> tasks;
    for (Subtask t : {Subtask::kAste, Subtask::kAte, Subtask::kOte,
                      Subtask::kAope}) {
      tasks.push_back({std::string(to_string(t)), score_subtask(p, g, t)});
    }
    std::vector<Row> settings;
    if (breakdown) {
      for (Setting s : kAllSettings) {
        settings.push_back({std::string(to_string(s)), score_by_setting(p, g, s)});
      }
    }

    if (opts.format == ReportFormat::kKv) {
      KvBlock kv;
      auto emit = [&kv](const std::string& prefix, const Score& s) {
        kv.add(prefix + ".precision", s.precision);
        kv.add(prefix + ".recall", s.recall);
        kv.add(prefix + ".f1", s.f1);
        kv.add(prefix + ".tp", s.true_positives);
        kv.add(prefix + ".predicted", s.predicted);
        kv.add(prefix + ".gold", s.gold);
      };
      for (const Row& r : tasks) emit("task." + r.name, r.score);
      if (breakdown) {
        kv.add("setting_filter", "symmetric");
        for (const Row& r : settings) emit("setting." + r.name, r.score);
      }
      kv.print(out);
      return kExitOk;
    }

    auto print_rows = [&out](const std::string& label,
                             const std::vector<Row>& rows) {
      TextTable table({label, "P", "R", "F1", "TP", "pred", "gold"});
      for (const Row& r : rows) {
        table.add(r.name, fixed(r.score.precision, 4), fixed(r.score.recall, 4),
                  fixed(r.score.f1, 4), r.score.true_positives,
                  r.score.predicted, r.score.gold);
      }
      table.print(out);
    };
    print_rows("task", tasks);
    if (breakdown) {
      out << "\nASTE by setting (prediction and gold filtered alike)\n";
      print_rows("setting", settings);
    }
    return kExitOk;
  });
}

inline int cmd_stats(const std::string& corpus_path, const RunOptions& opts,
                     std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const CorpusSplit split = read_corpus(corpus_path);
    const CountStats counts = sentiment_and_count_stats(split);
    const RoleDistribution roles = role_distribution(split, opts.jobs);
    const SettingCounts settings = setting_counts(split);

    if (opts.format == ReportFormat::kKv) {
      KvBlock kv;
      kv.add("sentences", counts.sentences);
      kv.add("triplets", counts.triplets);
      kv.add("pos", counts.pos);
      kv.add("neu", counts.neu);
      kv.add("neg", counts.neg);
      for (RoleClass c : kAllRoleClasses) {
        kv.add("role." + std::string(to_string(c)), roles[c]);
      }
      kv.add("setting.Single", settings.single);
      kv.add("setting.Multi", settings.multi);
      kv.add("setting.MultiAspect", settings.multi_aspect);
      kv.add("setting.MultiOpinion", settings.multi_opinion);
      kv.add("duplicates_removed", split.duplicates_removed);
      kv.print(out);
      return kExitOk;
    }

    TextTable overview({"#S", "#T", "#Pos", "#Neu", "#Neg"}, false);
    overview.add(counts.sentences, counts.triplets, counts.pos, counts.neu,
                 counts.neg);
    overview.print(out);
    out << "\nrole distribution of spans (aspect-opinion-snippet)\n";
    std::vector<std::string> header, row;
    for (RoleClass c : kAllRoleClasses) {
      header.emplace_back(to_string(c));
      row.push_back(std::to_string(roles[c]));
    }
    TextTable role_table(header, false);
    role_table.add_row(row);
    role_table.print(out);
    out << "\ntriplets by term length\n";
    TextTable setting_table({"Single", "Multi", "MultiAspect", "MultiOpinion"},
                            false);
    setting_table.add(settings.single, settings.multi, settings.multi_aspect,
                      settings.multi_opinion);
    setting_table.print(out);
    if (split.duplicates_removed) {
      out << "\nduplicate gold triplets removed: " << split.duplicates_removed
          << '\n';
    }
    return kExitOk;
  });
}

inline void print_limitation_report(const LimitationReport& report,
                                    ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::kKv) {
    KvBlock kv;
    kv.add("scheme", to_string(report.scheme));
    kv.add("collision_priority", kCollisionPriority);
    kv.add("triplets", report.total_triplets);
    kv.add("failures", report.failures());
    for (LimitationCause c : kAllCauses) {
      kv.add("cause." + std::string(to_string(c)), report.count(c));
    }
    for (std::size_t k = 0; k < report.records.size(); ++k) {
      const LimitationRecord& r = report.records[k];
      kv.add("record." + std::to_string(k + 1),
             "id=" + r.sentence_id + " cause=" + std::string(to_string(r.cause)) +
                 " " + detail::triplet_kv(r.triplet));
    }
    kv.print(out);
    return;
  }
  out << "scheme " << to_string(report.scheme) << " (collision priority "
      << kCollisionPriority << ")\n";
  std::vector<std::string> header = {"triplets"};
  std::vector<std::string> row = {std::to_string(report.total_triplets)};
  for (LimitationCause c : kAllCauses) {
    header.emplace_back(to_string(c));
    row.push_back(std::to_string(report.count(c)));
  }
  header.emplace_back("fail");
  row.push_back(std::to_string(report.failures()));
  TextTable table(header, false);
  table.add_row(row);
  table.print(out);
  if (!report.records.empty()) {
    out << "\nunrecovered triplets\n";
    TextTable items({"sentence", "cause", "aspect", "opinion", "sentiment"});
    for (const LimitationRecord& r : report.records) {
      std::ostringstream a, o;
      a << r.triplet.aspect;
      o << r.triplet.opinion;
      items.add(r.sentence_id, std::string(to_string(r.cause)), a.str(), o.str(),
                std::string(to_string(r.triplet.sentiment)));
    }
    items.print(out);
  }
}

inline int cmd_limits(const std::string& corpus_path, const RunOptions& opts,
                      std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const CorpusSplit split = read_corpus(corpus_path);
    print_limitation_report(limitation_report(split, opts.scheme, opts.jobs),
                            opts.format, out);
    return kExitOk;
  });
}

// encode -> greedy decode -> diff against gold. Exit 3 iff a gold triplet is
// not recovered.
inline int cmd_roundtrip(const std::string& corpus_path,
                         const RunOptions& opts, std::ostream& out,
                         std::ostream& err) {
  return detail::guarded(err, [&] {
    const CorpusSplit split = read_corpus(corpus_path);
    struct Diff {
      TripletList missing;
      TripletList spurious;
    };
    auto diffs = parallel_map(split.size(), opts.jobs, [&](std::size_t k) {
      const Encoding enc = encode(split.sentences[k], split.gold[k], opts.scheme);
      TripletList decoded = greedy_decode(enc.table).triplets;
      TripletList gold = split.gold[k];
      std::sort(decoded.begin(), decoded.end());
      std::sort(gold.begin(), gold.end());
      Diff d;
      std::set_difference(gold.begin(), gold.end(), decoded.begin(),
                          decoded.end(), std::back_inserter(d.missing));
      std::set_difference(decoded.begin(), decoded.end(), gold.begin(),
                          gold.end(), std::back_inserter(d.spurious));
      return d;
    });

    std::size_t total = 0, missing = 0, spurious = 0;
    for (const TripletList& g : split.gold) total += g.size();
    for (std::size_t k = 0; k < diffs.size(); ++k) {
      for (const Triplet& t : diffs[k].missing) {
        out << "missing  " << split.sentences[k].id() << ' ' << t << '\n';
        ++missing;
      }
      for (const Triplet& t : diffs[k].spurious) {
        out << "spurious " << split.sentences[k].id() << ' ' << t << '\n';
        ++spurious;
      }
    }
    if (opts.format == ReportFormat::kKv) {
      KvBlock kv;
      kv.add("scheme", to_string(opts.scheme));
      kv.add("triplets", total);
      kv.add("recovered", total - missing);
      kv.add("missing", missing);
      kv.add("spurious", spurious);
      kv.print(out);
    } else {
      out << "scheme " << to_string(opts.scheme) << ": recovered "
          << (total - missing) << " of " << total << " triplets, " << spurious
          << " spurious\n";
    }
    return missing == 0 ? kExitOk : kExitMismatch;
  });
}

}  // namespace spantag

#endif  // SPANTAG_COMMANDS_HPP_
