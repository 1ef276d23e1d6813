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

#include "cli_pipeline.h"
#include "doctest.h"
#include "json.hpp"
#include "stylenlg/error.h"
#include "stylenlg/run_config.h"

using namespace stylenlg;
using json = nlohmann::json;

namespace {

bool Has(const std::vector<std::string>& diags, const std::string& text) {
  for (const auto& d : diags)
    if (d.find(text) != std::string::npos) return true;
  return false;
}

std::vector<json> ReadJsonl(const std::string& path) {
  std::vector<json> out;
  std::istringstream in(ReadTextFile(path));
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("style requests") {
  const auto a = ParseStyleRequest("positive");
  CHECK(a.style == Style::kPositive);
  CHECK(a.lambda == 1.0);
  CHECK_FALSE(a.explicit_lambda);
  const auto b = ParseStyleRequest("positive:1.5");
  CHECK(b.lambda == 1.5);
  CHECK(b.explicit_lambda);
  CHECK(FormatStyleRequest(b) == "positive:1.5");
  CHECK(FormatStyleRequest(a) == "positive");
  CHECK_THROWS_AS(ParseStyleRequest("sarcastic"), Error);
  CHECK_THROWS_AS(ParseStyleRequest("positive:abc"), Error);
  CHECK_THROWS_AS(ParseStyleRequest("positive:"), Error);
}

TEST_CASE("config validation") {
  RunConfig ok;
  CHECK(ValidateConfig(ok).empty());

  RunConfig wd;
  wd.method = "wd";
  wd.styles = {ParseStyleRequest("short")};
  CHECK(Has(ValidateConfig(wd), "lexical styles require ct"));

  RunConfig beam;
  beam.beam = 0;
  CHECK(Has(ValidateConfig(beam), "beam width ≥ 1"));

  RunConfig many;
  many.method = "bswd";
  many.beam = 0;
  many.top_k = 0;
  many.max_len = 0;
  many.styles = {ParseStyleRequest("short"), ParseStyleRequest("short")};
  const auto d = ValidateConfig(many);
  CHECK(Has(d, "beam width"));
  CHECK(Has(d, "candidate set size"));
  CHECK(Has(d, "maximum length"));
  CHECK(Has(d, "given twice"));
  CHECK(Has(d, "lexical styles require ct"));
  CHECK(Has(d, "at least one semantic style"));

  RunConfig unknown;
  unknown.method = "magic";
  CHECK(ValidateConfig(unknown).size() == 1);

  RunConfig neg;
  neg.method = "bswd";
  neg.styles = {ParseStyleRequest("positive:-1")};
  CHECK(Has(ValidateConfig(neg), "λ > 0"));

  RunConfig wd_beam;
  wd_beam.method = "wd";
  wd_beam.beam = 2;
  wd_beam.styles = {ParseStyleRequest("positive")};
  CHECK(Has(ValidateConfig(wd_beam), "use bswd"));

  // Lexical controls ride along when the model was trained with them.
  RunConfig combined;
  combined.method = "bswd";
  combined.beam = 2;
  combined.lm_conditional = true;
  combined.styles = {ParseStyleRequest("short"), ParseStyleRequest("positive:1.5")};
  CHECK(ValidateConfig(combined).empty());

  RunConfig base;
  base.styles = {ParseStyleRequest("positive")};
  CHECK(Has(ValidateConfig(base), "baseline generation takes no styles"));

  RunConfig pplm;
  pplm.method = "pplm";
  pplm.lm_kind = "ngram";
  pplm.styles = {ParseStyleRequest("positive")};
  pplm.pplm.gamma_gm = 2.0;
  const auto pd = ValidateConfig(pplm);
  CHECK(Has(pd, "requires an nplm"));
  CHECK(Has(pd, "γ"));

  RunConfig ct;
  ct.method = "ct";
  ct.styles = {ParseStyleRequest("short"), ParseStyleRequest("long")};
  CHECK(ValidateConfig(ct).empty());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(testing::RunCli({}).code == cli::kExitUsage);
  CHECK(testing::RunCli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(testing::RunCli({"preprocess"}).code == cli::kExitUsage);
  CHECK(testing::RunCli({"generate", "--lm", "x", "--in", "y", "--out", "z", "--beam", "two"}).code ==
        cli::kExitUsage);
  const auto r = testing::RunCli({"generate", "--lm", "x", "--in", "y", "--out", "z", "--method",
                                  "wd", "--style", "short"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("lexical styles require ct") != std::string::npos);
  const auto s = testing::RunCli({"generate", "--lm", "x", "--in", "y", "--out", "z", "--method",
                                  "bswd", "--style", "sarcastic"});
  CHECK(s.code == cli::kExitUsage);
  CHECK(testing::RunCli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("runtime failures exit with code 1") {
  const auto dir = testing::FreshDir("cli_fail");
  const auto r = testing::RunCli({"preprocess", "--in", (dir / "missing").string(), "--out",
                                  (dir / "c.jsonl").string()});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err.rfind("error: ", 0) == 0);
  const auto nidf = testing::RunCli({"build-nidf", "--in", (dir / "none.jsonl").string(), "--out",
                                     (dir / "n.json").string()});
  CHECK(nidf.code == cli::kExitFailure);
  std::filesystem::remove_all(dir);
}

TEST_CASE("full pipeline") {
  const auto dir = testing::FreshDir("cli_pipeline");
  testing::WriteFixture(dir / "data", 60);
  const auto inputs = testing::Snapshot(dir / "data");
  const auto run = testing::RunPipeline(dir, "3");
  INFO(run.failure);
  REQUIRE(run.ok);
  // Inputs are left untouched.
  CHECK(testing::Snapshot(dir / "data") == inputs);

  const auto corpus = ReadJsonl((dir / "corpus.jsonl").string());
  CHECK(corpus.size() == 180);  // 60 dialogues x 3 system turns
  const auto annotated = ReadJsonl((dir / "ann.jsonl").string());
  REQUIRE(annotated.size() == corpus.size());
  CHECK(annotated[0].contains("styles"));

  const auto bswd = ReadJsonl((dir / "g_bswd.jsonl").string());
  REQUIRE(bswd.size() == 20);
  for (const auto& rec : bswd) {
    CHECK(rec.at("method") == "bswd");
    for (const char* key : {"mr", "styles", "output", "lm_logprob", "combined_logprob"})
      CHECK(rec.contains(key));
  }
  const auto pplm = ReadJsonl((dir / "g_pplm.jsonl").string());
  REQUIRE(pplm.size() == 10);
  for (const char* key : {"alpha", "lambda", "gamma_gm", "degenerated"})
    CHECK(pplm[0].contains(key));

  for (const auto& [name, result] : run.steps) {
    if (name.rfind("evaluate", 0) != 0) continue;
    CHECK(result.out.find("Style Acc.") != std::string::npos);
    CHECK(result.out.find("BLEU") != std::string::npos);
    CHECK(result.out.find("SER") != std::string::npos);
  }
  const auto report = ReadTextFile((dir / "report.md").string());
  CHECK(report.find("| Short | ct |") != std::string::npos);
  const auto sheet = ReadTextFile((dir / "worksheet.tsv").string());
  CHECK(sheet.rfind("Domain\tMR\tOutput\n", 0) == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("settings from a config file") {
  const auto dir = testing::FreshDir("cli_config");
  WriteTextFile((dir / "run.ini").string(), "[generate]\nbeam=0\n");
  const auto r = testing::RunCli({"--config", (dir / "run.ini").string(), "generate", "--lm", "x",
                                  "--in", "y", "--out", "z", "--method", "bswd", "--style",
                                  "positive"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("beam width") != std::string::npos);
  std::filesystem::remove_all(dir);
}
