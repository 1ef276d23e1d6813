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

#ifndef STYLENLG_MODEL_IO_H_
#define STYLENLG_MODEL_IO_H_

// Versioned text container for language models and classifiers. See
// docs/model_format.md for the layout.

#include <map>
#include <memory>
#include <string>

#include "stylenlg/classifier.h"
#include "stylenlg/language_model.h"
#include "stylenlg/nplm.h"
#include "stylenlg/vocab.h"

namespace stylenlg {

struct LoadedLm {
  std::string kind;  // "ngram" or "nplm"
  std::shared_ptr<const Vocabulary> vocab;
  std::shared_ptr<const LanguageModel> model;
  std::shared_ptr<const Nplm> nplm;  // set when kind == "nplm"
  std::map<std::string, std::string> params;
};

// `params` holds free-form metadata (training method, hyper-parameters).
std::string SerializeLanguageModel(const Vocabulary& vocab, const LanguageModel& model,
                                   const std::map<std::string, std::string>& params = {});
LoadedLm ParseLanguageModel(const std::string& text);

void SaveLanguageModel(const std::string& path, const Vocabulary& vocab,
                       const LanguageModel& model,
                       const std::map<std::string, std::string>& params = {});
LoadedLm LoadLanguageModel(const std::string& path);

// The classifier file embeds the vocabulary and the frozen NPLM its
// representations come from, so it loads standalone.
std::string SerializeClassifier(const StyleClassifier& classifier);
StyleClassifier ParseClassifier(const std::string& text);
void SaveClassifier(const std::string& path, const StyleClassifier& classifier);
StyleClassifier LoadClassifier(const std::string& path);

// Writes `contents` to `path`; throws Error naming the path on failure.
void WriteTextFile(const std::string& path, const std::string& contents);
std::string ReadTextFile(const std::string& path);

}  // namespace stylenlg

#endif  // STYLENLG_MODEL_IO_H_
