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

#ifndef STYLENLG_GENERATE_H_
#define STYLENLG_GENERATE_H_

// Greedy and beam-search decoding over an arbitrary per-step scorer. Plain LM
// decoding, weighted decoding and beam-search weighted decoding all run on
// this machinery, so the B=1 beam and the greedy path share one tie-breaking
// rule: higher score first, then the earlier parent hypothesis, then the lower
// token id.

#include <functional>
#include <span>
#include <vector>

#include "stylenlg/language_model.h"

namespace stylenlg {

struct Expansion {
  TokenId token = 0;
  double score = 0.0;       // log-score increment used for ranking
  double lm_logprob = 0.0;  // log p(token | history) under the base LM
};

// Fills `out` with the candidate next tokens for `history` (prompt followed
// by the tokens generated so far). Increments must be <= 0.
using Expander =
    std::function<void(std::span<const TokenId> history, std::vector<Expansion>* out)>;

struct GenerationResult {
  std::vector<TokenId> tokens;  // generated tokens, [EOS] excluded
  bool finished = false;        // [EOS] was produced
  double score = 0.0;           // accumulated ranking score
  double lm_logprob = 0.0;      // accumulated base-LM log-probability
};

GenerationResult GreedySearch(std::span<const TokenId> prompt, std::size_t max_len,
                              const Expander& expand);

// Returns the highest-scoring completed hypothesis. Hypotheses still open at
// max_len compete with completed ones.
GenerationResult BeamSearch(std::span<const TokenId> prompt, std::size_t beam_width,
                            std::size_t max_len, const Expander& expand);

struct DecodeMode {
  enum Kind { kGreedy, kBeam } kind = kGreedy;
  std::size_t beam = 1;

  static DecodeMode Greedy() { return {kGreedy, 1}; }
  static DecodeMode Beam(std::size_t b) { return {kBeam, b}; }
};

// Plain LM decoding scored by log-probability.
GenerationResult Generate(const LanguageModel& model, std::span<const TokenId> prompt,
                          DecodeMode mode, std::size_t max_len);

// Lowest-id argmax.
std::size_t ArgMax(std::span<const double> values);

}  // namespace stylenlg

#endif  // STYLENLG_GENERATE_H_
