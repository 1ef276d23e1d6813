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

#include <cmath>
#include <random>

#include "doctest.h"
#include "fixture.h"
#include "stylenlg/decoding.h"
#include "stylenlg/error.h"
#include "stylenlg/generate.h"
#include "stylenlg/language_model.h"
#include "stylenlg/tokenizer.h"

using namespace stylenlg;

namespace {

const std::vector<double> kLm = {.29, .20, .15, .06, .04};

void CheckNear(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(got[i] - want[i]) <= tol);
  }
}

double Sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

const testing::World& SmallWorld() {
  static const testing::World w = [] {
    testing::WorldConfig wc;
    wc.dialogues = 80;
    wc.held_out = 40;
    wc.context = 12;
    wc.epochs = 15;
    return testing::BuildWorld(wc);
  }();
  return w;
}

// Zero weights and biases: every class scores 1/n for every token.
StyleClassifier UniformClassifier(const testing::World& w) {
  const auto& p = w.sentiment->params();
  StyleClassifierParams z = p;
  std::fill(z.weight.begin(), z.weight.end(), 0.0);
  std::fill(z.bias.begin(), z.bias.end(), 0.0);
  return StyleClassifier(z, w.sentiment->shared_provider());
}

}  // namespace

TEST_CASE("weighted decoding table values") {
  CheckNear(WdRescore(kLm, std::vector<double>{0, 0, 0, .42, .51}),
            {.1981, .1981, .1981, .2036, .2022}, 2e-3);
  CheckNear(WdRescore(kLm, std::vector<double>{.45, .31, .18, .19, .22}),
            {.2167, .2027, .1956, .1926, .1922}, 2e-3);
}

TEST_CASE("constant style scores keep the LM ranking") {
  // softmax(.3, .2) by hand: e^.3 = 1.3499, e^.2 = 1.2214.
  const auto r = WdRescore(std::vector<double>{.6, .4}, std::vector<double>{.5, .5});
  CheckNear(r, {1.3499 / (1.3499 + 1.2214), 1.2214 / (1.3499 + 1.2214)}, 1e-4);
  CHECK(r[0] == doctest::Approx(.5250).epsilon(1e-3));
  CHECK(r[1] == doctest::Approx(.4750).epsilon(1e-3));
  CHECK(r[0] > r[1]);
}

TEST_CASE("rescored distributions are normalized and the single-style path is exact") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng() % 10;
    std::vector<double> lm(k), s1(k), s2(k);
    for (std::size_t i = 0; i < k; ++i) {
      lm[i] = u(rng);
      s1[i] = u(rng);
      s2[i] = u(rng);
    }
    const auto single = WdRescore(lm, s1);
    CHECK(std::abs(Sum(single) - 1.0) <= 1e-9);
    const std::vector<std::vector<double>> one = {s1};
    const std::vector<double> unit = {1.0};
    CHECK(WdRescore(lm, one, unit) == single);
    const std::vector<std::vector<double>> two = {s1, s2};
    const std::vector<double> lambdas = {0.5 + u(rng), 0.5 + u(rng)};
    const auto multi = WdRescore(lm, two, lambdas);
    CHECK(std::abs(Sum(multi) - 1.0) <= 1e-9);
    // Oracle for the two-style product.
    std::vector<double> e(k);
    double z = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      e[i] = std::exp(lm[i] * lambdas[0] * s1[i] * lambdas[1] * s2[i]);
      z += e[i];
    }
    for (std::size_t i = 0; i < k; ++i) CHECK(multi[i] == doctest::Approx(e[i] / z).epsilon(1e-12));
  }
  CHECK_THROWS_AS(WdRescore(std::vector<double>{}, std::vector<double>{}), Error);
}

TEST_CASE("select_candidates") {
  Vocabulary v;
  for (const char* w : {"nice", "good", "great", "restaurant", "very", "the", "a"}) v.AddWord(w);
  std::vector<double> dist(v.size(), 0.0);
  const std::vector<std::pair<const char*, double>> lm = {
      {"nice", .29}, {"good", .20}, {"great", .15}, {"restaurant", .06},
      {"very", .04}, {"the", .03},  {"a", .03}};
  for (const auto& [w, p] : lm) dist[v.Id(w)] = p;
  const auto top = SelectCandidates(dist, 5);
  std::vector<std::string> names;
  for (TokenId id : top) names.push_back(v.Token(id));
  CHECK(names == std::vector<std::string>{"nice", "good", "great", "restaurant", "very"});
  CHECK(SelectCandidates(dist, 1) == std::vector<TokenId>{v.Id("nice")});
  CHECK(SelectCandidates(dist, 1000).size() == v.size());
  // Equal probabilities go to the lower id.
  const std::vector<double> flat(6, 1.0 / 6);
  CHECK(SelectCandidates(flat, 3) == std::vector<TokenId>{0, 1, 2});
}

TEST_CASE("config diagnostics") {
  DecodeConfig c;
  CHECK(c.Diagnostics().empty());
  c.beam = 0;
  c.top_k = 0;
  CHECK(c.Diagnostics().size() == 3);
  DecodeConfig wd;
  wd.beam = 3;
  CHECK(wd.Diagnostics().size() == 1);
  const auto& w = SmallWorld();
  DecodeConfig bad;
  bad.styles = {{w.sentiment.get(), w.positive, 0.0}};
  CHECK(bad.Diagnostics().size() == 1);
  bad.styles = {{w.sentiment.get(), 9, 1.0}};
  CHECK(bad.Diagnostics().size() == 1);
}

TEST_CASE("candidate scores over a trained model") {
  const auto& w = SmallWorld();
  DecodeConfig c;
  c.styles = {{w.sentiment.get(), w.positive, 1.0}};
  for (bool entire : {false, true}) {
    c.entire_sequence = entire;
    for (std::size_t i = 0; i < 10; ++i) {
      const auto prompt = EncodePrompt(*w.base.vocab, w.test[i].mr, {});
      const auto cands = ScoreCandidates(*w.base.model, c, prompt, prompt.size());
      REQUIRE(cands.size() == 5);
      double sum = 0.0;
      for (const auto& sc : cands) sum += sc.combined;
      CHECK(std::abs(sum - 1.0) <= 1e-9);
      for (std::size_t j = 1; j < cands.size(); ++j) CHECK(cands[j - 1].lm_prob >= cands[j].lm_prob);
    }
  }
}

TEST_CASE("degenerate discriminators reduce to greedy decoding") {
  const auto& w = SmallWorld();
  const auto uniform = UniformClassifier(w);
  for (std::size_t i = 0; i < w.test.size(); ++i) {
    const auto prompt = EncodePrompt(*w.base.vocab, w.test[i].mr, {});
    const auto greedy = Generate(*w.base.model, prompt, DecodeMode::Greedy(), 40);
    DecodeConfig k1;
    k1.top_k = 1;
    k1.styles = {{w.sentiment.get(), w.positive, 1.0}};
    CHECK(WdGenerate(*w.base.model, k1, prompt).tokens == greedy.tokens);
    DecodeConfig flat;
    flat.styles = {{&uniform, w.positive, 1.0}};
    CHECK(WdGenerate(*w.base.model, flat, prompt).tokens == greedy.tokens);
  }
}

TEST_CASE("beam width one equals weighted decoding on 100 prefixes") {
  const auto& w = SmallWorld();
  DecodeConfig c;
  c.styles = {{w.sentiment.get(), w.positive, 1.0}};
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto& ex = w.train[rng() % w.train.size()];
    auto prompt = EncodePrompt(*w.base.vocab, ex.mr, {});
    // Extend some prompts into the template.
    const auto body = w.base.vocab->Encode(Tokenize(ex.tmpl.text()));
    prompt.insert(prompt.end(), body.begin(), body.begin() + std::min<std::size_t>(rng() % 3, body.size()));
    const auto wd = WdGenerate(*w.base.model, c, prompt);
    DecodeConfig b1 = c;
    b1.method = DecodeConfig::kBswd;
    const auto bs1 = BswdGenerate(*w.base.model, b1, prompt);
    CHECK(bs1.tokens == wd.tokens);
    CHECK(bs1.score == wd.score);
    CHECK(WeightedDecode(*w.base.model, c, prompt).tokens == wd.tokens);
  }
}

namespace {

// Scripted increments over tokens {0:[BOS], 2:[EOS], 4:a, 5:b, 6:c}.
// Greedy takes a then [EOS] for -0.6. Width two keeps a and b after the first
// step, but both children of b outrank a's [EOS], so the greedy path is pruned
// and every completion left scores below it.
void Scripted(std::span<const TokenId> history, std::vector<Expansion>* out) {
  const std::size_t depth = history.size() - 1;
  const TokenId last = history.back();
  if (depth == 0) {
    *out = {{4, -0.1, -0.1}, {5, -0.2, -0.2}, {6, -0.3, -0.3}};
  } else if (last == 4) {
    *out = {{Vocabulary::kEosId, -0.5, -0.5}, {5, -2.0, -2.0}};
  } else if (last == 5) {
    *out = {{6, -0.01, -0.01}, {4, -0.02, -0.02}};
  } else {
    *out = {{Vocabulary::kEosId, -0.5, -0.5}};
  }
}

}  // namespace

TEST_CASE("a wider beam can prune the greedy path") {
  const std::vector<TokenId> prompt = {Vocabulary::kBosId};
  const auto g = BeamSearch(prompt, 1, 5, Scripted);
  CHECK(g.tokens == std::vector<TokenId>{4});
  CHECK(g.score == doctest::Approx(-0.6));
  const auto b2 = BeamSearch(prompt, 2, 5, Scripted);
  CHECK(b2.finished);
  CHECK(b2.score < g.score);
  // Width three keeps every first-step hypothesis and recovers it.
  CHECK(BeamSearch(prompt, 3, 5, Scripted).score >= g.score);
}

TEST_CASE("short control with positive rescoring runs end to end") {
  const auto& w = SmallWorld();
  // Classifier over the conditional model's own embeddings so its vocabulary
  // matches the one being decoded.
  auto provider = std::make_shared<RepresentationProvider>(
      RepresentationProvider::Mode::kBagOfEmbeddings, w.ct.nplm, w.ct.vocab);
  SyntheticConfig sc;
  sc.dialogues = 80;
  const auto ds = ParseSyntheticCorpus(MakeSyntheticCorpus(sc));
  const auto clf = TrainClassifier("sentiment", ds.sentiment_labels, provider, {});
  DecodeConfig c;
  c.method = DecodeConfig::kBswd;
  c.beam = 2;
  c.styles = {{&clf, static_cast<std::size_t>(clf.ClassIndex("positive")), 1.5}};
  int shorter = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    const auto with = EncodePrompt(*w.ct.vocab, w.test[i].mr, {"[LENGTH_SHORT]"});
    const auto without = EncodePrompt(*w.ct.vocab, w.test[i].mr, {"[LENGTH_LONG]"});
    const auto a = BswdGenerate(*w.ct.model, c, with);
    const auto b = BswdGenerate(*w.ct.model, c, without);
    CHECK_FALSE(a.tokens.empty());
    if (a.tokens.size() < b.tokens.size()) ++shorter;
  }
  CHECK(shorter >= 10);
}
