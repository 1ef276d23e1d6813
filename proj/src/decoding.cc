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

#include "stylenlg/decoding.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stylenlg/error.h"
#include "stylenlg/nplm.h"

namespace stylenlg {

std::vector<std::string> DecodeConfig::Diagnostics() const {
  std::vector<std::string> out;
  if (beam < 1) out.push_back("beam width ≥ 1");
  if (top_k < 1) out.push_back("candidate set size K ≥ 1");
  if (method == kWd && beam != 1) out.push_back("wd uses beam width 1; use bswd for wider beams");
  for (const auto& s : styles) {
    if (s.classifier == nullptr) {
      out.push_back("style target without a classifier");
      continue;
    }
    if (!(s.lambda > 0.0) || !std::isfinite(s.lambda)) out.push_back("style weights λ > 0");
    if (s.target_class >= s.classifier->class_names().size())
      out.push_back("target class out of range for classifier " + s.classifier->style());
  }
  return out;
}

std::vector<double> WdRescore(std::span<const double> lm_probs,
                              std::span<const std::vector<double>> style_scores,
                              std::span<const double> lambdas) {
  if (lm_probs.empty()) throw Error("candidate set is empty");
  if (!lambdas.empty() && lambdas.size() != style_scores.size())
    throw Error("one weight per style is required");
  std::vector<double> x(lm_probs.begin(), lm_probs.end());
  for (std::size_t j = 0; j < style_scores.size(); ++j) {
    if (style_scores[j].size() != x.size()) throw Error("style scores do not match candidates");
    const double lambda = lambdas.empty() ? 1.0 : lambdas[j];
    for (std::size_t i = 0; i < x.size(); ++i) x[i] *= lambda * style_scores[j][i];
  }
  return Softmax(x);
}

std::vector<double> WdRescore(std::span<const double> lm_probs,
                              std::span<const double> style_scores) {
  const std::vector<std::vector<double>> scores{{style_scores.begin(), style_scores.end()}};
  return WdRescore(lm_probs, scores);
}

std::vector<TokenId> SelectCandidates(std::span<const double> dist, std::size_t k) {
  std::vector<TokenId> ids(dist.size());
  std::iota(ids.begin(), ids.end(), 0);
  k = std::min(k, ids.size());
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k), ids.end(),
                    [&dist](TokenId a, TokenId b) {
                      if (dist[a] != dist[b]) return dist[a] > dist[b];
                      return a < b;
                    });
  ids.resize(k);
  return ids;
}

std::vector<ScoredCandidate> ScoreCandidates(const LanguageModel& lm, const DecodeConfig& config,
                                             std::span<const TokenId> history,
                                             std::size_t prompt_len) {
  const auto dist = lm.NextDistribution(history);
  const auto ids = SelectCandidates(dist, config.top_k);
  std::vector<double> probs(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) probs[i] = dist[ids[i]];

  std::vector<std::vector<double>> scores(config.styles.size(), std::vector<double>(ids.size()));
  std::vector<double> lambdas(config.styles.size());
  std::vector<TokenId> seq;
  for (std::size_t j = 0; j < config.styles.size(); ++j) {
    const auto& st = config.styles[j];
    lambdas[j] = st.lambda;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (config.entire_sequence) {
        seq.assign(history.begin() + static_cast<std::ptrdiff_t>(prompt_len), history.end());
        seq.push_back(ids[i]);
        scores[j][i] = st.classifier->PredictProba(seq)[st.target_class];
      } else {
        scores[j][i] = st.classifier->TokenStyleScore(ids[i], st.target_class);
      }
    }
  }
  const auto combined = WdRescore(probs, scores, lambdas);
  std::vector<ScoredCandidate> out(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out[i].token = ids[i];
    out[i].lm_prob = probs[i];
    out[i].combined = combined[i];
    double s = 1.0;
    for (std::size_t j = 0; j < scores.size(); ++j) s *= lambdas[j] * scores[j][i];
    out[i].style_score = s;
  }
  return out;
}

namespace {

Expander WdExpander(const LanguageModel& lm, const DecodeConfig& config, std::size_t prompt_len) {
  return [&lm, &config, prompt_len](std::span<const TokenId> history,
                                     std::vector<Expansion>* out) {
    for (const auto& c : ScoreCandidates(lm, config, history, prompt_len)) {
      if (c.lm_prob <= 0.0) continue;
      out->push_back({c.token, std::log(c.combined), std::log(c.lm_prob)});
    }
  };
}

void CheckConfig(const DecodeConfig& config) {
  const auto diags = config.Diagnostics();
  if (!diags.empty()) throw Error("invalid decoding config: " + diags.front());
}

}  // namespace

GenerationResult WdGenerate(const LanguageModel& lm, const DecodeConfig& config,
                            std::span<const TokenId> prompt) {
  DecodeConfig c = config;
  c.method = DecodeConfig::kWd;
  c.beam = 1;
  CheckConfig(c);
  return GreedySearch(prompt, c.max_len, WdExpander(lm, c, prompt.size()));
}

GenerationResult BswdGenerate(const LanguageModel& lm, const DecodeConfig& config,
                              std::span<const TokenId> prompt) {
  DecodeConfig c = config;
  c.method = DecodeConfig::kBswd;
  CheckConfig(c);
  return BeamSearch(prompt, c.beam, c.max_len, WdExpander(lm, c, prompt.size()));
}

GenerationResult WeightedDecode(const LanguageModel& lm, const DecodeConfig& config,
                                std::span<const TokenId> prompt) {
  return config.method == DecodeConfig::kWd ? WdGenerate(lm, config, prompt)
                                            : BswdGenerate(lm, config, prompt);
}

}  // namespace stylenlg
