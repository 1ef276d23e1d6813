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

#ifndef STYLENLG_SYNTHETIC_H_
#define STYLENLG_SYNTHETIC_H_

// Synthetic two-register restaurant corpus used by tests and demos. Each
// system turn is rendered in one of three length registers (short, medium,
// long) and one of two sentiment registers (neutral, positive) whose style
// vocabularies are disjoint. The corpus is emitted in the dialogue JSON
// layout the parser reads, so fixtures exercise the full pipeline.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stylenlg/classifier.h"
#include "stylenlg/corpus.h"

namespace stylenlg {

struct SyntheticConfig {
  std::uint64_t seed = 7;
  std::size_t dialogues = 400;
  std::size_t system_turns_per_dialogue = 3;
  double positive_rate = 0.4;
  double second_slot_rate = 0.6;
};

struct SyntheticCorpus {
  nlohmann::json schema;     // array of services
  nlohmann::json dialogues;  // array of dialogues
  // Register of each system turn, in dialogue order.
  std::vector<std::string> sentiment;  // "neutral" / "positive"
  std::vector<std::string> length;     // "short" / "medium" / "long"
};

SyntheticCorpus MakeSyntheticCorpus(const SyntheticConfig& config);

// Parses the synthetic dialogues and pairs every example with its
// sentiment register as a classifier training row (template text, label).
struct SyntheticDataset {
  std::vector<CorpusExample> examples;
  std::vector<LabeledText> sentiment_labels;
};
SyntheticDataset ParseSyntheticCorpus(const SyntheticCorpus& corpus);

}  // namespace stylenlg

#endif  // STYLENLG_SYNTHETIC_H_
