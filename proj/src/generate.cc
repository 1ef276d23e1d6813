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

#include "stylenlg/generate.h"

#include <algorithm>
#include <cmath>

#include "stylenlg/error.h"

namespace stylenlg {

std::size_t ArgMax(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

namespace {

struct Hypothesis {
  std::vector<TokenId> tokens;
  double score = 0.0;
  double lm_logprob = 0.0;
};

struct Candidate {
  std::size_t parent;
  Expansion expansion;
  double score;
};

bool Better(const Candidate& a, const Candidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.parent != b.parent) return a.parent < b.parent;
  return a.expansion.token < b.expansion.token;
}

std::vector<TokenId> Concat(std::span<const TokenId> prompt, const std::vector<TokenId>& gen) {
  std::vector<TokenId> out(prompt.begin(), prompt.end());
  out.insert(out.end(), gen.begin(), gen.end());
  return out;
}

}  // namespace

GenerationResult GreedySearch(std::span<const TokenId> prompt, std::size_t max_len,
                              const Expander& expand) {
  GenerationResult result;
  std::vector<TokenId> history(prompt.begin(), prompt.end());
  std::vector<Expansion> options;
  for (std::size_t step = 0; step < max_len; ++step) {
    options.clear();
    expand(history, &options);
    const Expansion* best = nullptr;
    for (const auto& e : options) {
      if (!std::isfinite(e.score)) continue;
      if (best == nullptr || e.score > best->score ||
          (e.score == best->score && e.token < best->token))
        best = &e;
    }
    if (best == nullptr) break;
    result.score += best->score;
    result.lm_logprob += best->lm_logprob;
    if (best->token == Vocabulary::kEosId) {
      result.finished = true;
      break;
    }
    result.tokens.push_back(best->token);
    history.push_back(best->token);
  }
  return result;
}

GenerationResult BeamSearch(std::span<const TokenId> prompt, std::size_t beam_width,
                            std::size_t max_len, const Expander& expand) {
  if (beam_width == 0) throw Error("beam width must be >= 1");
  std::vector<Hypothesis> active(1);
  std::vector<Hypothesis> finished;
  std::vector<Candidate> candidates;
  std::vector<Expansion> options;

  for (std::size_t step = 0; step < max_len && !active.empty(); ++step) {
    candidates.clear();
    for (std::size_t p = 0; p < active.size(); ++p) {
      options.clear();
      expand(Concat(prompt, active[p].tokens), &options);
      for (const auto& e : options) {
        if (!std::isfinite(e.score)) continue;
        candidates.push_back({p, e, active[p].score + e.score});
      }
    }
    const std::size_t keep = std::min(beam_width, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(keep),
                      candidates.end(), Better);

    std::vector<Hypothesis> next;
    for (std::size_t i = 0; i < keep; ++i) {
      const auto& c = candidates[i];
      Hypothesis h;
      h.tokens = active[c.parent].tokens;
      h.score = c.score;
      h.lm_logprob = active[c.parent].lm_logprob + c.expansion.lm_logprob;
      if (c.expansion.token == Vocabulary::kEosId) {
        finished.push_back(std::move(h));
      } else {
        h.tokens.push_back(c.expansion.token);
        next.push_back(std::move(h));
      }
    }
    active = std::move(next);

    // Increments are non-positive, so no open hypothesis can overtake the best
    // completed one.
    if (!finished.empty() && !active.empty()) {
      double best_done = -INFINITY;
      for (const auto& f : finished) best_done = std::max(best_done, f.score);
      if (best_done >= active.front().score) break;
    }
  }

  const Hypothesis* best = nullptr;
  bool best_finished = false;
  for (const auto& f : finished) {
    if (best == nullptr || f.score > best->score) {
      best = &f;
      best_finished = true;
    }
  }
  for (const auto& a : active) {
    if (best == nullptr || a.score > best->score) {
      best = &a;
      best_finished = false;
    }
  }
  GenerationResult result;
  if (best == nullptr) return result;
  result.tokens = best->tokens;
  result.finished = best_finished;
  result.score = best->score;
  result.lm_logprob = best->lm_logprob;
  return result;
}

GenerationResult Generate(const LanguageModel& model, std::span<const TokenId> prompt,
                          DecodeMode mode, std::size_t max_len) {
  const Expander expand = [&model](std::span<const TokenId> history,
                                   std::vector<Expansion>* out) {
    const auto dist = model.NextDistribution(history);
    out->reserve(dist.size());
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (dist[v] <= 0.0) continue;
      const double lp = std::log(dist[v]);
      out->push_back({static_cast<TokenId>(v), lp, lp});
    }
  };
  if (mode.kind == DecodeMode::kGreedy) return GreedySearch(prompt, max_len, expand);
  return BeamSearch(prompt, mode.beam, max_len, expand);
}

}  // namespace stylenlg
