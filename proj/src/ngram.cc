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

#include <algorithm>

#include "stylenlg/error.h"
#include "stylenlg/language_model.h"

namespace stylenlg {

std::vector<TokenId> ContextWindow(std::span<const TokenId> history, std::size_t width) {
  std::vector<TokenId> out(width, Vocabulary::kBosId);
  const std::size_t take = std::min(width, history.size());
  std::copy(history.end() - static_cast<std::ptrdiff_t>(take), history.end(),
            out.end() - static_cast<std::ptrdiff_t>(take));
  return out;
}

NGramModel NGramModel::Train(const std::vector<std::vector<TokenId>>& corpus,
                             std::size_t vocab_size, int order, double k) {
  if (order < 1) throw Error("n-gram order must be >= 1");
  if (k < 0.0) throw Error("smoothing constant must be >= 0");
  if (vocab_size == 0) throw Error("empty vocabulary");
  NGramModel model;
  model.vocab_size_ = vocab_size;
  model.order_ = order;
  model.k_ = k;
  std::size_t tokens = 0;
  for (const auto& seq : corpus) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const TokenId w = seq[i];
      if (w < 0 || static_cast<std::size_t>(w) >= vocab_size)
        throw Error("token id out of range in n-gram corpus");
      ++tokens;
      for (std::size_t len = 0; len < static_cast<std::size_t>(order) && len <= i; ++len) {
        std::vector<TokenId> ctx(seq.begin() + static_cast<std::ptrdiff_t>(i - len),
                                 seq.begin() + static_cast<std::ptrdiff_t>(i));
        auto& cc = model.counts_[std::move(ctx)];
        cc.total += 1.0;
        cc.next[w] += 1.0;
      }
    }
  }
  if (tokens == 0) throw Error("cannot train an n-gram model on an empty corpus");
  return model;
}

NGramModel NGramModel::FromCounts(std::size_t vocab_size, int order, double k, Table counts) {
  NGramModel model;
  model.vocab_size_ = vocab_size;
  model.order_ = order;
  model.k_ = k;
  model.counts_ = std::move(counts);
  if (!model.counts_.contains({})) throw Error("n-gram table lacks unigram counts");
  return model;
}

double NGramModel::ContextCount(std::span<const TokenId> context) const {
  auto it = counts_.find(std::vector<TokenId>(context.begin(), context.end()));
  return it == counts_.end() ? 0.0 : it->second.total;
}

double NGramModel::Conditional(std::span<const TokenId> context, TokenId word) const {
  const double v = static_cast<double>(vocab_size_);
  auto it = counts_.find(std::vector<TokenId>(context.begin(), context.end()));
  if (it == counts_.end() || it->second.total == 0.0) return 1.0 / v;
  const auto& cc = it->second;
  auto w = cc.next.find(word);
  const double c = w == cc.next.end() ? 0.0 : w->second;
  return (c + k_) / (cc.total + k_ * v);
}

std::vector<double> NGramModel::Distribution(const ContextCounts& cc) const {
  const double v = static_cast<double>(vocab_size_);
  const double denom = cc.total + k_ * v;
  std::vector<double> dist(vocab_size_, k_ / denom);
  for (const auto& [w, c] : cc.next) dist[static_cast<std::size_t>(w)] = (c + k_) / denom;
  return dist;
}

std::vector<double> NGramModel::NextDistribution(std::span<const TokenId> history) const {
  const std::size_t max_len = std::min(static_cast<std::size_t>(order_ - 1), history.size());
  for (std::size_t len = max_len + 1; len-- > 0;) {
    std::vector<TokenId> ctx(history.end() - static_cast<std::ptrdiff_t>(len), history.end());
    auto it = counts_.find(ctx);
    if (it != counts_.end() && it->second.total > 0.0) return Distribution(it->second);
  }
  return std::vector<double>(vocab_size_, 1.0 / static_cast<double>(vocab_size_));
}

}  // namespace stylenlg
