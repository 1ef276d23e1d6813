// Copyright 2026 The stylenlg Authors.
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

#ifndef STYLENLG_TESTS_CLI_PIPELINE_H_
#define STYLENLG_TESTS_CLI_PIPELINE_H_

// Runs the command-line tool in-process over a small synthetic corpus, from
// raw dialogues to the report and worksheet.

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "stylenlg/model_io.h"
#include "stylenlg/synthetic.h"

namespace stylenlg::testing {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "stylenlg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline void WriteFixture(const std::filesystem::path& dir, std::size_t dialogues) {
  SyntheticConfig sc;
  sc.dialogues = dialogues;
  const auto corpus = MakeSyntheticCorpus(sc);
  const auto ds = ParseSyntheticCorpus(corpus);
  std::filesystem::create_directories(dir);
  WriteTextFile((dir / "schema.json").string(), corpus.schema.dump(1) + "\n");
  WriteTextFile((dir / "dialogues_001.json").string(), corpus.dialogues.dump(1) + "\n");
  std::string labeled;
  for (const auto& row : ds.sentiment_labels)
    labeled += nlohmann::json{{"text", row.text}, {"label", row.label}}.dump() + "\n";
  WriteTextFile((dir / "sentiment.jsonl").string(), labeled);
}

struct PipelineRun {
  std::vector<std::pair<std::string, CliResult>> steps;
  bool ok = true;
  std::string failure;
};

// Every step writes under `dir`. Stops at the first failing step.
inline PipelineRun RunPipeline(const std::filesystem::path& dir, const std::string& seed) {
  WriteFixture(dir / "data", 60);
  const auto p = [&dir](const char* name) { return (dir / name).string(); };
  const std::string lm_shape[] = {"--context", "8", "--embed", "8", "--hidden", "16",
                                  "--epochs", "3"};
  auto with_shape = [&](std::vector<std::string> args) {
    args.insert(args.end(), std::begin(lm_shape), std::end(lm_shape));
    return args;
  };
  const std::vector<std::pair<std::string, std::vector<std::string>>> steps = {
      {"preprocess",
       {"preprocess", "--in", p("data"), "--out", p("corpus.jsonl"), "--stats", p("stats.json")}},
      {"annotate",
       {"annotate", "--in", p("corpus.jsonl"), "--out", p("ann.jsonl"), "--stats", p("dist.md")}},
      {"build-nidf", {"build-nidf", "--in", p("corpus.jsonl"), "--out", p("nidf.json")}},
      {"train-lm baseline",
       with_shape({"train-lm", "--in", p("corpus.jsonl"), "--out", p("base.model")})},
      {"train-lm ct",
       with_shape({"train-lm", "--in", p("ann.jsonl"), "--out", p("ct.model"), "--method", "ct"})},
      {"train-classifier",
       {"train-classifier", "--in", p("data") + "/sentiment.jsonl", "--lm", p("base.model"),
        "--family", "sentiment", "--out", p("sent.clf")}},
      {"generate baseline",
       {"generate", "--lm", p("base.model"), "--in", p("corpus.jsonl"), "--out", p("g_base.jsonl"),
        "--limit", "20"}},
      {"generate ct",
       {"generate", "--lm", p("ct.model"), "--in", p("corpus.jsonl"), "--out", p("g_ct.jsonl"),
        "--method", "ct", "--style", "short", "--limit", "20"}},
      {"generate bswd",
       {"generate", "--lm", p("base.model"), "--in", p("corpus.jsonl"), "--out", p("g_bswd.jsonl"),
        "--method", "bswd", "--beam", "2", "--style", "positive", "--classifier", p("sent.clf"),
        "--limit", "20"}},
      {"generate pplm",
       {"generate", "--lm", p("base.model"), "--in", p("corpus.jsonl"), "--out", p("g_pplm.jsonl"),
        "--method", "pplm", "--style", "positive", "--classifier", p("sent.clf"), "--sample",
        "--limit", "10"}},
      {"evaluate ct",
       {"evaluate", "--gen", p("g_ct.jsonl"), "--refs", p("corpus.jsonl"), "--style", "short",
        "--out", p("e_ct.json")}},
      {"evaluate bswd",
       {"evaluate", "--gen", p("g_bswd.jsonl"), "--refs", p("corpus.jsonl"), "--style", "positive",
        "--classifier", p("sent.clf"), "--out", p("e_bswd.json")}},
      {"report", {"report", p("e_ct.json"), p("e_bswd.json"), "--out", p("report.md")}},
      {"worksheet", {"worksheet", "--gen", p("g_bswd.jsonl"), "--out", p("worksheet.tsv")}},
  };
  PipelineRun run;
  for (const auto& [name, args] : steps) {
    std::vector<std::string> full = {"--quiet", "--seed", seed};
    full.insert(full.end(), args.begin(), args.end());
    run.steps.emplace_back(name, RunCli(full));
    if (run.steps.back().second.code != 0) {
      run.ok = false;
      run.failure = name + ": " + run.steps.back().second.err;
      break;
    }
  }
  return run;
}

// Relative path -> contents for every regular file under `dir`.
inline std::map<std::string, std::string> Snapshot(const std::filesystem::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    out[std::filesystem::relative(e.path(), dir).string()] = ReadTextFile(e.path().string());
  }
  return out;
}

inline std::filesystem::path FreshDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("stylenlg_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace stylenlg::testing

#endif  // STYLENLG_TESTS_CLI_PIPELINE_H_
