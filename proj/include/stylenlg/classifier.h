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

#ifndef STYLENLG_CLASSIFIER_H_
#define STYLENLG_CLASSIFIER_H_

// Single-layer softmax classifiers over time-averaged token representations.
// The same classifier annotates semantic styles, acts as the PPLM
// discriminator and scores candidate tokens for weighted decoding.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stylenlg/nplm.h"
#include "stylenlg/vocab.h"

namespace stylenlg {

// Per-token vectors drawn from a frozen NPLM: either the embedding rows
// (bag of embeddings) or the hidden state after reading each position.
class RepresentationProvider {
 public:
  enum class Mode { kBagOfEmbeddings, kNplmHidden };

  RepresentationProvider(Mode mode, std::shared_ptr<const Nplm> nplm,
                         std::shared_ptr<const Vocabulary> vocab);

  Mode mode() const { return mode_; }
  std::size_t dim() const;
  const Nplm& nplm() const { return *nplm_; }
  const Vocabulary& vocab() const { return *vocab_; }
  std::shared_ptr<const Nplm> shared_nplm() const { return nplm_; }
  std::shared_ptr<const Vocabulary> shared_vocab() const { return vocab_; }

  // One vector per token. For hidden mode, position t sees the m tokens
  // ending at t (left-padded with [BOS]).
  std::vector<std::vector<double>> PerToken(std::span<const TokenId> ids) const;
  // Representation of position t only.
  std::vector<double> AtPosition(std::span<const TokenId> ids, std::size_t t) const;
  // Mean over positions; throws Error for an empty sequence.
  std::vector<double> Average(std::span<const TokenId> ids) const;

  std::vector<TokenId> Encode(std::string_view text) const;

 private:
  Mode mode_;
  std::shared_ptr<const Nplm> nplm_;
  std::shared_ptr<const Vocabulary> vocab_;
};

std::string_view ModeName(RepresentationProvider::Mode mode);
RepresentationProvider::Mode ModeFromName(std::string_view name);

// o_bar = sum_t o_t / T. Throws Error for an empty sequence.
std::vector<double> AverageRepresentation(std::span<const std::vector<double>> vectors);

// Weights are stored class-major: n_classes rows of rep_dim.
struct StyleClassifierParams {
  std::string style;
  std::vector<std::string> class_names;
  std::size_t rep_dim = 0;
  std::vector<double> weight;
  std::vector<double> bias;

  std::size_t n_classes() const { return class_names.size(); }
  void Validate() const;
};

class StyleClassifier {
 public:
  StyleClassifier(StyleClassifierParams params,
                  std::shared_ptr<const RepresentationProvider> provider);

  const StyleClassifierParams& params() const { return params_; }
  const std::vector<std::string>& class_names() const { return params_.class_names; }
  const std::string& style() const { return params_.style; }
  const RepresentationProvider& provider() const { return *provider_; }
  std::shared_ptr<const RepresentationProvider> shared_provider() const { return provider_; }

  // Index of a class name, or -1.
  int ClassIndex(std::string_view name) const;

  // softmax(W o_bar + b). Throws Error for empty input.
  std::vector<double> PredictProba(std::span<const TokenId> ids) const;
  std::vector<double> PredictProbaText(std::string_view text) const;
  std::vector<double> ProbaFromRepresentation(std::span<const double> rep) const;
  std::vector<double> Logits(std::span<const double> rep) const;

  // p(cls | w): PredictProba on the one-token sequence {w}.
  double TokenStyleScore(TokenId w, std::size_t cls) const;

 private:
  StyleClassifierParams params_;
  std::shared_ptr<const RepresentationProvider> provider_;
  std::vector<double> token_scores_;  // vocab x n_classes
};

struct LabeledText {
  std::string text;
  std::string label;
};

// {"text": ..., "label": ...} per line. Numeric labels are read as strings.
std::vector<LabeledText> ReadLabeledText(const std::string& path);

struct ClassifierTrainConfig {
  std::uint64_t seed = 1;
  double learning_rate = 1.0;
  int epochs = 200;
  // Weight decay on W (not on the bias). The reported loss includes it.
  double l2 = 1e-3;
};

struct ClassifierTrainReport {
  double initial_loss = 0.0;
  std::vector<double> epoch_losses;
};

// Full-batch gradient descent on softmax regression. Weights start at zero
// and biases at the log class priors; a step that would raise the loss is
// retried with half the learning rate, so the loss never increases. Classes
// are the sorted distinct labels. Throws Error if fewer than two classes
// occur.
StyleClassifier TrainClassifier(const std::string& style, const std::vector<LabeledText>& data,
                                std::shared_ptr<const RepresentationProvider> provider,
                                const ClassifierTrainConfig& config,
                                ClassifierTrainReport* report = nullptr);

// Mean cross-entropy of `classifier` on the data (unknown labels rejected).
double ClassifierLoss(const StyleClassifier& classifier, const std::vector<LabeledText>& data);
double ClassifierAccuracy(const StyleClassifier& classifier,
                          const std::vector<LabeledText>& data);

// Normalizes file labels for the known families: formal ("formal"/"informal",
// 1/0, true/false), sentiment (SST merge), empathy ("empathy"/"non_empathy").
// Other families keep labels verbatim.
std::string NormalizeLabel(std::string_view family, std::string_view label);

}  // namespace stylenlg

#endif  // STYLENLG_CLASSIFIER_H_
