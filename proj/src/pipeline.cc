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

#include "stylenlg/pipeline.h"

#include <algorithm>

#include "stylenlg/error.h"
#include "stylenlg/tokenizer.h"

namespace stylenlg {

std::vector<StyleLabels> AnnotateCorpusLexical(const std::vector<CorpusExample>& examples,
                                               const LexicalThresholds& thresholds,
                                               const NidfTable* table) {
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(examples.size());
  for (const auto& ex : examples) tokens.push_back(ex.tmpl.Tokens());
  NidfTable built;
  if (table == nullptr) {
    built = NidfTable::Build(tokens);
    table = &built;
  }
  std::vector<StyleLabels> labels(examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i)
    AnnotateLexical(tokens[i], thresholds, *table, &labels[i]);
  return labels;
}

std::vector<std::string> ControlsFor(const StyleLabels& labels, std::span<const Style> ct_styles) {
  std::vector<std::string> out;
  for (Style s : kAllStyles) {
    if (std::find(ct_styles.begin(), ct_styles.end(), s) != ct_styles.end() && labels.Get(s))
      out.emplace_back(ControlToken(s));
  }
  return out;
}

std::vector<std::string> ControlsFor(std::span<const Style> styles) {
  StyleLabels all;
  for (Style s : styles) all.Set(s, true);
  return ControlsFor(all, styles);
}

std::vector<std::string> TrainingStrings(const std::vector<CorpusExample>& examples,
                                         const std::vector<StyleLabels>& labels,
                                         std::span<const Style> ct_styles) {
  if (!ct_styles.empty() && labels.size() != examples.size())
    throw Error("conditional training needs one label set per example");
  std::vector<std::string> out;
  out.reserve(examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i) {
    const auto controls = ct_styles.empty() ? std::vector<std::string>{}
                                            : ControlsFor(labels[i], ct_styles);
    out.push_back(BuildTrainingString(Flatten(examples[i].mr), examples[i].tmpl, controls));
  }
  return out;
}

TrainedLm TrainLanguageModel(const std::vector<std::string>& training_strings, const LmSpec& spec,
                             const std::function<void(int, double)>& log) {
  if (training_strings.empty()) throw TrainingError("no training data");
  auto vocab = std::make_shared<Vocabulary>(
      Vocabulary::Build(training_strings, spec.min_count, DefaultControlRegistry().tokens()));
  std::vector<std::vector<TokenId>> ids;
  ids.reserve(training_strings.size());
  for (const auto& s : training_strings) ids.push_back(vocab->EncodeString(s));

  TrainedLm out;
  out.vocab = vocab;
  if (spec.kind == "nplm") {
    NplmShape shape = spec.shape;
    shape.vocab = vocab->size();
    auto model = std::make_shared<Nplm>(TrainNplm(ids, shape, spec.train, &out.report, log));
    out.nplm = model;
    out.model = model;
  } else if (spec.kind == "ngram") {
    out.model = std::make_shared<NGramModel>(
        NGramModel::Train(ids, vocab->size(), spec.ngram_order, spec.ngram_k));
  } else {
    throw Error("unknown language model kind: " + spec.kind);
  }
  return out;
}

std::vector<TokenId> EncodePrompt(const Vocabulary& vocab, const MeaningRepresentation& mr,
                                  const std::vector<std::string>& controls) {
  return vocab.EncodeString(BuildPrompt(Flatten(mr), controls));
}

std::string DecodeTemplate(const Vocabulary& vocab, std::span<const TokenId> ids) {
  std::vector<std::string> tokens;
  for (TokenId id : ids) {
    if (id != Vocabulary::kUnkId && (id < 4 || vocab.IsControl(id))) continue;
    tokens.push_back(vocab.Token(id));
  }
  return JoinTokens(tokens);
}

}  // namespace stylenlg
