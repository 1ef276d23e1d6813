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

// Writes the synthetic restaurant corpus as a dialogue split directory
// (schema.json, dialogues_001.json) plus sentiment.jsonl, the labeled
// templates used to train a sentiment classifier.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "stylenlg/error.h"
#include "stylenlg/model_io.h"
#include "stylenlg/synthetic.h"

int main(int argc, char** argv) {
  using stylenlg::WriteTextFile;
  CLI::App app{"Synthetic two-register dialogue corpus", "stylenlg_fixture"};
  stylenlg::SyntheticConfig config;
  std::string out;
  app.add_option("--out", out, "Output directory")->required();
  app.add_option("--seed", config.seed)->capture_default_str();
  app.add_option("--dialogues", config.dialogues)->capture_default_str();
  app.add_option("--turns", config.system_turns_per_dialogue, "System turns per dialogue")
      ->capture_default_str();
  app.add_option("--positive-rate", config.positive_rate)->capture_default_str();
  app.add_option("--second-slot-rate", config.second_slot_rate)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    const auto corpus = stylenlg::MakeSyntheticCorpus(config);
    const auto dataset = stylenlg::ParseSyntheticCorpus(corpus);
    std::filesystem::create_directories(out);
    const std::filesystem::path dir(out);
    WriteTextFile((dir / "schema.json").string(), corpus.schema.dump(1) + "\n");
    WriteTextFile((dir / "dialogues_001.json").string(), corpus.dialogues.dump(1) + "\n");
    std::string labeled;
    for (const auto& row : dataset.sentiment_labels)
      labeled += nlohmann::json{{"text", row.text}, {"label", row.label}}.dump() + "\n";
    WriteTextFile((dir / "sentiment.jsonl").string(), labeled);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
