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

#ifndef STYLENLG_TESTS_FIXTURE_H_
#define STYLENLG_TESTS_FIXTURE_H_

// Small trained models over the synthetic corpus, shared by the decoding,
// PPLM and acceptance tests.

#include <memory>
#include <vector>

#include "stylenlg/classifier.h"
#include "stylenlg/pipeline.h"
#include "stylenlg/synthetic.h"

namespace stylenlg::testing {

struct WorldConfig {
  std::size_t dialogues = 400;
  std::size_t held_out = 100;
  std::size_t context = 12;
  std::size_t embed = 16;
  std::size_t hidden = 48;
  int epochs = 15;
  bool train_ct = true;
  RepresentationProvider::Mode mode = RepresentationProvider::Mode::kBagOfEmbeddings;
};

struct World {
  std::vector<CorpusExample> train;
  std::vector<CorpusExample> test;
  std::vector<StyleLabels> train_labels;
  TrainedLm base;
  TrainedLm ct;  // empty unless train_ct
  std::shared_ptr<const StyleClassifier> sentiment;
  std::size_t positive = 0;
};

inline World BuildWorld(const WorldConfig& wc) {
  SyntheticConfig sc;
  sc.dialogues = wc.dialogues;
  const auto ds = ParseSyntheticCorpus(MakeSyntheticCorpus(sc));
  World w;
  const auto split = ds.examples.end() - static_cast<std::ptrdiff_t>(wc.held_out);
  w.train.assign(ds.examples.begin(), split);
  w.test.assign(split, ds.examples.end());
  const std::vector<LabeledText> clf_data(
      ds.sentiment_labels.begin(),
      ds.sentiment_labels.end() - static_cast<std::ptrdiff_t>(wc.held_out));
  w.train_labels = AnnotateCorpusLexical(w.train, LexicalThresholds{});

  LmSpec spec;
  spec.shape.context = wc.context;
  spec.shape.embed = wc.embed;
  spec.shape.hidden = wc.hidden;
  spec.train.epochs = wc.epochs;
  spec.train.learning_rate = 0.1;
  spec.train.batch_size = 16;
  const std::vector<Style> none;
  const std::vector<Style> ct = {Style::kShort, Style::kLong};
  w.base = TrainLanguageModel(TrainingStrings(w.train, w.train_labels, none), spec);
  if (wc.train_ct) w.ct = TrainLanguageModel(TrainingStrings(w.train, w.train_labels, ct), spec);

  auto provider = std::make_shared<RepresentationProvider>(wc.mode, w.base.nplm, w.base.vocab);
  w.sentiment = std::make_shared<StyleClassifier>(
      TrainClassifier("sentiment", clf_data, provider, ClassifierTrainConfig{}));
  w.positive = static_cast<std::size_t>(w.sentiment->ClassIndex("positive"));
  return w;
}

}  // namespace stylenlg::testing

#endif  // STYLENLG_TESTS_FIXTURE_H_
