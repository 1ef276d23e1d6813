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

#ifndef STYLENLG_PIPELINE_H_
#define STYLENLG_PIPELINE_H_

// Glue shared by the command-line tool and the end-to-end tests: building
// training strings, training language models and encoding prompts.

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "stylenlg/corpus.h"
#include "stylenlg/language_model.h"
#include "stylenlg/nplm.h"
#include "stylenlg/style.h"
#include "stylenlg/vocab.h"

namespace stylenlg {

// Lexical labels for every example, with the NIDF table built from the same
// templates when `table` is null.
std::vector<StyleLabels> AnnotateCorpusLexical(const std::vector<CorpusExample>& examples,
                                               const LexicalThresholds& thresholds,
                                               const NidfTable* table = nullptr);

// Control tokens for the styles in `ct_styles` that hold in `labels`, in
// canonical style order.
std::vector<std::string> ControlsFor(const StyleLabels& labels, std::span<const Style> ct_styles);
std::vector<std::string> ControlsFor(std::span<const Style> styles);

// One "[BOS] ctrls flat [SEP] template [EOS]" string per example. `labels`
// may be empty when `ct_styles` is empty (baseline training).
std::vector<std::string> TrainingStrings(const std::vector<CorpusExample>& examples,
                                         const std::vector<StyleLabels>& labels,
                                         std::span<const Style> ct_styles);

struct LmSpec {
  std::string kind = "nplm";  // "nplm" or "ngram"
  NplmShape shape;            // vocab is filled in from the data
  TrainConfig train;
  int ngram_order = 3;
  double ngram_k = 0.1;
  int min_count = 1;
};

struct TrainedLm {
  std::shared_ptr<const Vocabulary> vocab;
  std::shared_ptr<const LanguageModel> model;
  std::shared_ptr<const Nplm> nplm;  // null for n-gram models
  TrainReport report;
};

TrainedLm TrainLanguageModel(const std::vector<std::string>& training_strings, const LmSpec& spec,
                             const std::function<void(int, double)>& log = {});

std::vector<TokenId> EncodePrompt(const Vocabulary& vocab, const MeaningRepresentation& mr,
                                  const std::vector<std::string>& controls);

// Generated ids to template text; special tokens other than [UNK] dropped.
std::string DecodeTemplate(const Vocabulary& vocab, std::span<const TokenId> ids);

}  // namespace stylenlg

#endif  // STYLENLG_PIPELINE_H_
