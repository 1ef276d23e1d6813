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

#ifndef STYLENLG_TESTS_ORACLES_H_
#define STYLENLG_TESTS_ORACLES_H_

// Reference computations used as independent checks. Nothing here calls into
// the code paths under test beyond plain loss evaluation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace stylenlg::testing {

// Central difference of f at x along coordinate i.
inline double CentralDifference(const std::function<double()>& f, double* x, double eps) {
  const double saved = *x;
  *x = saved + eps;
  const double plus = f();
  *x = saved - eps;
  const double minus = f();
  *x = saved;
  return (plus - minus) / (2.0 * eps);
}

// |a - b| / max(|a|, |b|, floor). The floor keeps coordinates whose true
// gradient is ~0 from dominating the comparison.
inline double RelativeError(double analytic, double numeric, double floor = 1e-6) {
  const double scale = std::max({std::abs(analytic), std::abs(numeric), floor});
  return std::abs(analytic - numeric) / scale;
}

// Distinct random indices in [0, n).
inline std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(k, n));
  return all;
}

// Textbook corpus BLEU, written independently: n-gram counts through
// std::map, clipping against the per-n-gram maximum over references.
inline double NaiveBleu(const std::vector<std::vector<std::string>>& cands,
                        const std::vector<std::vector<std::vector<std::string>>>& refs, int max_n,
                        double eps) {
  using Gram = std::vector<std::string>;
  auto grams = [](const std::vector<std::string>& s, int n) {
    std::map<Gram, int> out;
    for (int i = 0; i + n <= static_cast<int>(s.size()); ++i)
      ++out[Gram(s.begin() + i, s.begin() + i + n)];
    return out;
  };
  double log_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    double match = 0.0, total = 0.0;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      std::map<Gram, int> best;
      for (const auto& r : refs[c])
        for (const auto& [g, k] : grams(r, n)) best[g] = std::max(best[g], k);
      for (const auto& [g, k] : grams(cands[c], n)) {
        total += k;
        auto it = best.find(g);
        match += std::min(k, it == best.end() ? 0 : it->second);
      }
    }
    const double p = total > 0 ? match / total : 0.0;
    log_sum += std::log(p > 0 ? p : eps);
  }
  double c_len = 0.0, r_len = 0.0;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    const double len = static_cast<double>(cands[c].size());
    double best = -1.0;
    for (const auto& r : refs[c]) {
      const double rl = static_cast<double>(r.size());
      if (best < 0 || std::abs(rl - len) < std::abs(best - len) ||
          (std::abs(rl - len) == std::abs(best - len) && rl < best))
        best = rl;
    }
    c_len += len;
    r_len += best;
  }
  if (c_len == 0) return 0.0;
  const double bp = c_len >= r_len ? 1.0 : std::exp(1.0 - r_len / c_len);
  return std::clamp(bp * std::exp(log_sum / max_n), 0.0, 1.0);
}

}  // namespace stylenlg::testing

#endif  // STYLENLG_TESTS_ORACLES_H_
