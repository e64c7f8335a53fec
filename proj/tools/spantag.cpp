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

// spantag: encode, decode, score and analyze span-tagged triplet corpora.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spantag/commands.hpp"

namespace {

int default_jobs() {
  const char* env = std::getenv("SPANTAG_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Span tagging toolkit for aspect sentiment triplets."};
  app.require_subcommand(1);

  spantag::RunOptions opts;
  opts.jobs = default_jobs();
  std::string scheme = "3d", format = "text";
  std::string input, gold, output, incidents, corpus;
  bool breakdown = false;

  auto add_scheme = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", scheme, "Tagging scheme: 3d, 2d or 1d")
        ->check(CLI::IsMember({"3d", "2d", "1d"}));
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format: text or kv")
        ->check(CLI::IsMember({"text", "kv"}));
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", opts.jobs,
                    "Worker threads (default: $SPANTAG_JOBS or 1)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* encode = app.add_subcommand("encode", "Corpus to tag tables");
  encode->add_option("corpus", input, "Triplet corpus")
      ->required()
      ->check(CLI::ExistingFile);
  encode->add_option("-o,--output", output, "Tag table file")->required();
  encode->add_option("--incidents", incidents,
                     "Incident log (default: <output>.incidents)");
  add_scheme(encode);
  add_jobs(encode);

  CLI::App* decode = app.add_subcommand("decode", "Tag tables to triplets");
  decode->add_option("tables", input, "Tag table file")
      ->required()
      ->check(CLI::ExistingFile);
  decode->add_option("-o,--output", output, "Triplet corpus to write")
      ->required();
  decode->add_option("--corpus", corpus, "Corpus supplying the tokens")
      ->check(CLI::ExistingFile);
  add_scheme(decode);
  add_jobs(decode);

  CLI::App* score = app.add_subcommand("score", "Score predictions");
  score->add_option("pred", input, "Predicted triplets")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("gold", gold, "Gold triplets")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_flag("--breakdown", breakdown, "Add per-setting ASTE scores");
  add_format(score);

  CLI::App* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("corpus", input, "Triplet corpus")
      ->required()
      ->check(CLI::ExistingFile);
  add_format(stats);
  add_jobs(stats);

  CLI::App* limits = app.add_subcommand("limits", "Unrecoverable triplets");
  limits->add_option("corpus", input, "Triplet corpus")
      ->required()
      ->check(CLI::ExistingFile);
  add_scheme(limits);
  add_format(limits);
  add_jobs(limits);

  CLI::App* roundtrip =
      app.add_subcommand("roundtrip", "Encode, decode and diff against gold");
  roundtrip->add_option("corpus", input, "Triplet corpus")
      ->required()
      ->check(CLI::ExistingFile);
  add_scheme(roundtrip);
  add_format(roundtrip);
  add_jobs(roundtrip);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return spantag::kExitUsage;
  }

  opts.scheme = *spantag::parse_scheme(scheme);
  opts.format =
      format == "kv" ? spantag::ReportFormat::kKv : spantag::ReportFormat::kText;

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  if (*encode) {
    return spantag::cmd_encode(
        input, output, incidents.empty() ? output + ".incidents" : incidents,
        opts, out, err);
  }
  if (*decode) {
    return spantag::cmd_decode(
        input, output,
        corpus.empty() ? std::nullopt : std::optional<std::string>(corpus), opts,
        out, err);
  }
  if (*score) return spantag::cmd_score(input, gold, breakdown, opts, out, err);
  if (*stats) return spantag::cmd_stats(input, opts, out, err);
  if (*limits) return spantag::cmd_limits(input, opts, out, err);
  if (*roundtrip) return spantag::cmd_roundtrip(input, opts, out, err);
  return spantag::kExitUsage;
}
