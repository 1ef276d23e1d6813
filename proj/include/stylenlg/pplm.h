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

#ifndef STYLENLG_PPLM_H_
#define STYLENLG_PPLM_H_

// Guided generation by perturbing the NPLM hidden state. At every step a
// perturbation dH is fitted by gradient descent on
//
//   sum_j w_j CE_j(f_j(mean representation)) + lambda * KL(p~ || p)
//
// where p~ = softmax(W2 (H + dH) + b2) and p is the unperturbed next-token
// distribution. A hidden-state discriminator built over the generating model
// reads the perturbed state H + dH of every generated step directly. Any
// other discriminator reads the tokens generated so far plus the
// p~-weighted embedding (or hidden state) of the next token. The next token
// is then chosen from the post-norm fusion of p~ and p.

#include <cstdint>
#include <span>
#include <vector>

#include "stylenlg/classifier.h"
#include "stylenlg/generate.h"
#include "stylenlg/nplm.h"

namespace stylenlg {

struct PplmConfig {
  double alpha = 0.02;
  double lambda = 1.0;
  double gamma_gm = 0.3;
  int iterations = 3;
  std::size_t max_len = 40;
  std::size_t max_repeat = 4;
  bool sample = false;  // argmax when false
  std::uint64_t seed = 1;

  std::vector<std::string> Diagnostics() const;
};

struct PplmDiscriminator {
  const StyleClassifier* classifier = nullptr;
  std::size_t target_class = 0;
  double weight = 1.0;
};

// True when `classifier` reads hidden states of a model identical to `lm`.
bool ReadsHiddenState(const Nplm& lm, const StyleClassifier& classifier);

// Everything about one step that does not depend on dH.
struct PerturbationState {
  std::vector<double> hidden;       // H
  std::vector<double> base_logits;  // o
  std::vector<double> delta_h;      // dH
  // Per discriminator: sum of representations of earlier generated steps.
  std::vector<std::vector<double>> rep_sums;
  // Tokens generated before the next position.
  std::vector<TokenId> generated;
};

struct PplmObjectiveResult {
  double loss = 0.0;
  double ce = 0.0;  // weighted sum of discriminator cross-entropies
  double kl = 0.0;
  std::vector<double> grad_ce;  // d ce / d dH
  std::vector<double> grad_kl;  // d kl / d dH
  std::vector<double> grad;     // grad_ce + lambda * grad_kl
};

// Loss and exact gradient with respect to state.delta_h. Throws Error on a
// non-finite loss.
PplmObjectiveResult PplmObjective(const Nplm& lm, const PerturbationState& state,
                                  std::span<const PplmDiscriminator> discriminators,
                                  double lambda);

// dH <- dH - alpha * (grad_ce + lambda * grad_kl).
void PplmUpdate(std::span<double> delta_h, std::span<const double> grad_ce,
                std::span<const double> grad_kl, double alpha, double lambda);

// p~^gamma * p^(1-gamma) / beta with both inputs floored at 1e-12. Returns the
// inputs unchanged at gamma = 0 (p) and gamma = 1 (p~).
std::vector<double> PostNormFusion(std::span<const double> perturbed,
                                   std::span<const double> base, double gamma);

// KL(softmax(a) || softmax(b)) from logits.
double KlFromLogits(std::span<const double> a, std::span<const double> b);

struct PplmResult {
  GenerationResult generation;
  bool degenerated = false;
  double mean_kl = 0.0;  // mean KL(p~ || p) over generated steps
  std::size_t steps = 0;
};

PplmResult PplmGenerate(const Nplm& lm, std::span<const PplmDiscriminator> discriminators,
                        const PplmConfig& config, std::span<const TokenId> prompt);

}  // namespace stylenlg

#endif  // STYLENLG_PPLM_H_
