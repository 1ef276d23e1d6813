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

#ifndef STYLENLG_NPLM_H_
#define STYLENLG_NPLM_H_

// Feed-forward neural probabilistic language model with one tanh hidden layer:
//
//   x = concat(E[c_1], ..., E[c_m])
//   H = tanh(W1 x + b1)
//   o = W2 H + b2
//   p = softmax(o)
//
// The hidden activation H is exposed so PPLM can perturb it.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "stylenlg/language_model.h"

namespace stylenlg {

struct NplmShape {
  std::size_t vocab = 0;
  std::size_t context = 4;  // m
  std::size_t embed = 32;   // d
  std::size_t hidden = 64;  // h

  std::size_t input() const { return context * embed; }
  bool operator==(const NplmShape&) const = default;
};

// Parameter blocks, all row-major:
//   embedding  vocab  x embed
//   w1         hidden x (context*embed)
//   b1         hidden
//   w2         vocab  x hidden
//   b2         vocab
struct NplmParams {
  NplmShape shape;
  std::vector<double> embedding;
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  std::vector<double> b2;

  static NplmParams Zeros(const NplmShape& shape);
  // Uniform initialization driven by `seed`.
  static NplmParams Random(const NplmShape& shape, std::uint64_t seed);

  std::span<const double> EmbeddingRow(TokenId id) const;
  bool AllFinite() const;
  void Validate() const;  // throws Error on shape mismatch
  bool operator==(const NplmParams&) const = default;
};

struct NplmActivations {
  std::vector<double> input;   // x
  std::vector<double> hidden;  // H
  std::vector<double> logits;  // o
  std::vector<double> probs;   // p
};

struct TrainExample {
  std::vector<TokenId> context;  // exactly m ids
  TokenId target = 0;
};

struct TrainConfig {
  std::uint64_t seed = 1;
  double learning_rate = 0.1;
  int epochs = 10;
  std::size_t batch_size = 16;
  // Only positions after [SEP] become targets when the sequence has one.
  bool template_only_loss = true;
};

struct TrainReport {
  double initial_loss = 0.0;
  std::vector<double> epoch_losses;  // mean CE after each epoch
};

class Nplm : public LanguageModel {
 public:
  explicit Nplm(NplmParams params);

  const NplmParams& params() const { return params_; }
  NplmParams& mutable_params() { return params_; }
  const NplmShape& shape() const { return params_.shape; }

  std::size_t vocab_size() const override { return params_.shape.vocab; }
  std::vector<double> NextDistribution(std::span<const TokenId> history) const override;

  // Context must have exactly m ids; throws Error for out-of-range ids.
  NplmActivations Forward(std::span<const TokenId> context) const;
  // o and p for a caller-supplied hidden vector (the PPLM override hook).
  void ForwardFromHidden(std::span<const double> hidden, std::vector<double>* logits,
                         std::vector<double>* probs) const;
  // Hidden state only.
  std::vector<double> Hidden(std::span<const TokenId> context) const;

  // Mean cross-entropy of the batch.
  double Loss(std::span<const TrainExample> batch) const;
  // Exact gradients of the mean cross-entropy; returns the loss.
  double Backward(std::span<const TrainExample> batch, NplmParams* grads) const;

 private:
  void CheckContext(std::span<const TokenId> context) const;
  NplmParams params_;
};

void Softmax(std::span<const double> logits, std::span<double> probs);
std::vector<double> Softmax(std::span<const double> logits);

// Builds training examples from id sequences (each starting with [BOS]).
std::vector<TrainExample> MakeTrainExamples(const std::vector<std::vector<TokenId>>& sequences,
                                            std::size_t context, bool template_only_loss);

// Minibatch SGD on cross-entropy. Deterministic for a given seed. Throws
// TrainingError if the loss becomes non-finite. `log` (optional) receives
// one line per epoch.
Nplm TrainNplm(const std::vector<std::vector<TokenId>>& sequences, const NplmShape& shape,
               const TrainConfig& config, TrainReport* report = nullptr,
               const std::function<void(int, double)>& log = {});

// Continues training from existing parameters.
void TrainNplmInPlace(Nplm* model, const std::vector<TrainExample>& examples,
                      const TrainConfig& config, TrainReport* report,
                      const std::function<void(int, double)>& log = {});

// Deterministic uniform double in [0, 1) from a 64-bit generator value.
inline double UnitUniform(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace stylenlg

#endif  // STYLENLG_NPLM_H_
