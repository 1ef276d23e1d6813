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

#ifndef STYLENLG_LANGUAGE_MODEL_H_
#define STYLENLG_LANGUAGE_MODEL_H_

#include <map>
#include <span>
#include <vector>

#include "stylenlg/vocab.h"

namespace stylenlg {

// Next-token distribution provider over ids [0, vocab_size()).
class LanguageModel {
 public:
  virtual ~LanguageModel() = default;
  virtual std::size_t vocab_size() const = 0;
  // Distribution of the token following `history`. Sums to 1, no negative
  // entries.
  virtual std::vector<double> NextDistribution(std::span<const TokenId> history) const = 0;
};

// Add-k smoothed n-gram model. Contexts that were never observed back off to
// their longest observed suffix, ending at the unigram distribution.
class NGramModel : public LanguageModel {
 public:
  // Throws Error for an empty corpus or order < 1.
  static NGramModel Train(const std::vector<std::vector<TokenId>>& corpus,
                          std::size_t vocab_size, int order, double k);

  std::size_t vocab_size() const override { return vocab_size_; }
  std::vector<double> NextDistribution(std::span<const TokenId> history) const override;

  // (count(ctx, w) + k) / (count(ctx) + k |V|); uniform for unseen contexts.
  double Conditional(std::span<const TokenId> context, TokenId word) const;
  // Number of times `context` was followed by any token.
  double ContextCount(std::span<const TokenId> context) const;

  int order() const { return order_; }
  double k() const { return k_; }

  struct ContextCounts {
    double total = 0.0;
    std::map<TokenId, double> next;
  };
  using Table = std::map<std::vector<TokenId>, ContextCounts>;
  const Table& counts() const { return counts_; }

  static NGramModel FromCounts(std::size_t vocab_size, int order, double k, Table counts);

 private:
  std::vector<double> Distribution(const ContextCounts& cc) const;

  std::size_t vocab_size_ = 0;
  int order_ = 1;
  double k_ = 0.0;
  Table counts_;  // keyed by context (length 0 .. order-1)
};

// Left-pads with [BOS] so the result has exactly `width` ids.
std::vector<TokenId> ContextWindow(std::span<const TokenId> history, std::size_t width);

}  // namespace stylenlg

#endif  // STYLENLG_LANGUAGE_MODEL_H_
