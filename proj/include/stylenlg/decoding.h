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

#ifndef STYLENLG_DECODING_H_
#define STYLENLG_DECODING_H_

// Weighted decoding (WD) and beam-search weighted decoding (BSWD). Each step
// takes the top-K LM candidates, multiplies their probabilities by the
// weighted style scores, and softmax-normalizes the products over the
// candidate set.

#include <span>
#include <vector>

#include "stylenlg/classifier.h"
#include "stylenlg/generate.h"
#include "stylenlg/language_model.h"

namespace stylenlg {

struct StyleTarget {
  const StyleClassifier* classifier = nullptr;
  std::size_t target_class = 0;
  double lambda = 1.0;
};

struct DecodeConfig {
  enum Method { kWd, kBswd } method = kWd;
  std::size_t beam = 1;
  std::size_t top_k = 5;
  std::size_t max_len = 40;
  // Score candidates with the classifier on the whole generated sequence
  // plus the candidate instead of the candidate token alone.
  bool entire_sequence = false;
  std::vector<StyleTarget> styles;

  // Empty when valid.
  std::vector<std::string> Diagnostics() const;
};

struct ScoredCandidate {
  TokenId token = 0;
  double lm_prob = 0.0;
  double style_score = 1.0;  // prod_j lambda_j p(a_j | w)
  double combined = 0.0;
};

// softmax_i(lm_i * prod_j lambda_j * s_ji). `style_scores[j]` holds the
// scores of style j for every candidate; `lambdas` may be empty (all 1).
std::vector<double> WdRescore(std::span<const double> lm_probs,
                              std::span<const std::vector<double>> style_scores,
                              std::span<const double> lambdas = {});
// Single-style form.
std::vector<double> WdRescore(std::span<const double> lm_probs,
                              std::span<const double> style_scores);

// Top-K ids by probability, ties to the lower id, in ranked order.
std::vector<TokenId> SelectCandidates(std::span<const double> dist, std::size_t k);

// Candidates for the next position with their style and combined scores.
std::vector<ScoredCandidate> ScoreCandidates(const LanguageModel& lm, const DecodeConfig& config,
                                             std::span<const TokenId> history,
                                             std::size_t prompt_len);

GenerationResult WdGenerate(const LanguageModel& lm, const DecodeConfig& config,
                            std::span<const TokenId> prompt);
GenerationResult BswdGenerate(const LanguageModel& lm, const DecodeConfig& config,
                              std::span<const TokenId> prompt);
// Dispatches on config.method.
GenerationResult WeightedDecode(const LanguageModel& lm, const DecodeConfig& config,
                                std::span<const TokenId> prompt);

}  // namespace stylenlg

#endif  // STYLENLG_DECODING_H_
