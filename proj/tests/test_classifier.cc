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
#include "stylenlg/classifier.h"
#include "stylenlg/error.h"
#include "stylenlg/generate.h"
#include "stylenlg/nplm.h"
#include "stylenlg/vocab.h"

using namespace stylenlg;

namespace {

const std::vector<std::string> kWarm = {"lovely", "charming", "great",  "superb",
                                        "happy",  "bright",   "sunny", "sweet"};
const std::vector<std::string> kCold = {"table", "list",  "item", "entry",
                                        "row",   "field", "page", "record"};

struct Setup {
  std::shared_ptr<const Vocabulary> vocab;
  std::shared_ptr<const Nplm> nplm;
  std::shared_ptr<const RepresentationProvider> bag;
  std::shared_ptr<const RepresentationProvider> hidden;
};

Setup MakeSetup() {
  std::vector<std::string> corpus;
  std::string line;
  for (const auto& w : kWarm) line += w + " ";
  for (const auto& w : kCold) line += w + " ";
  corpus.push_back(line);
  Setup s;
  s.vocab = std::make_shared<Vocabulary>(Vocabulary::Build(corpus, 1));
  NplmShape shape{s.vocab->size(), 3, 16, 12};
  s.nplm = std::make_shared<Nplm>(NplmParams::Random(shape, 4));
  s.bag = std::make_shared<RepresentationProvider>(RepresentationProvider::Mode::kBagOfEmbeddings,
                                                   s.nplm, s.vocab);
  s.hidden = std::make_shared<RepresentationProvider>(RepresentationProvider::Mode::kNplmHidden,
                                                      s.nplm, s.vocab);
  return s;
}

// Sentences drawn from one of the two disjoint vocabularies.
std::vector<LabeledText> SeparableData(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LabeledText> out;
  for (std::size_t i = 0; i < n; ++i) {
    const bool warm = i % 2 == 0;
    const auto& words = warm ? kWarm : kCold;
    std::string text;
    const std::size_t len = 2 + rng() % 5;
    for (std::size_t j = 0; j < len; ++j) text += words[rng() % words.size()] + " ";
    out.push_back({text, warm ? "warm" : "cold"});
  }
  return out;
}

}  // namespace

TEST_CASE("average representation") {
  const std::vector<std::vector<double>> same = {{1, 2}, {1, 2}, {1, 2}};
  CHECK(AverageRepresentation(same) == std::vector<double>{1, 2});
  const std::vector<std::vector<double>> two = {{1, 0}, {0, 1}};
  CHECK(AverageRepresentation(two) == std::vector<double>{0.5, 0.5});
  const std::vector<std::vector<double>> a = {{1, 5}, {2, -1}, {7, 3}};
  const std::vector<std::vector<double>> b = {{7, 3}, {1, 5}, {2, -1}};
  const auto ma = AverageRepresentation(a);
  const auto mb = AverageRepresentation(b);
  CHECK(ma[0] == doctest::Approx(mb[0]));
  CHECK(ma[1] == doctest::Approx(mb[1]));
  CHECK_THROWS_AS(AverageRepresentation(std::vector<std::vector<double>>{}), Error);
}

TEST_CASE("representation providers") {
  const auto s = MakeSetup();
  CHECK(s.bag->dim() == 16);
  CHECK(s.hidden->dim() == 12);
  const auto ids = s.bag->Encode("lovely table");
  REQUIRE(ids.size() == 2);
  const auto per = s.bag->PerToken(ids);
  const auto row = s.nplm->params().EmbeddingRow(ids[1]);
  CHECK(std::equal(per[1].begin(), per[1].end(), row.begin()));
  const auto h = s.hidden->AtPosition(ids, 1);
  const auto expect = s.nplm->Hidden(ContextWindow(ids, 3));
  CHECK(h == expect);
  CHECK(ModeFromName("bag") == RepresentationProvider::Mode::kBagOfEmbeddings);
  CHECK(ModeFromName("nplm-hidden") == RepresentationProvider::Mode::kNplmHidden);
  CHECK_THROWS_AS(ModeFromName("lstm"), Error);
}

TEST_CASE("separable fixture is learned") {
  const auto s = MakeSetup();
  const auto train = SeparableData(80, 1);
  const auto held = SeparableData(40, 2);
  for (const auto& provider : {s.bag, s.hidden}) {
    CAPTURE(ModeName(provider->mode()));
    const auto clf = TrainClassifier("temperature", train, provider, {});
    CHECK(clf.class_names() == std::vector<std::string>{"cold", "warm"});
    CHECK(ClassifierAccuracy(clf, train) >= 0.95);
    CHECK(ClassifierAccuracy(clf, held) >= 0.9);
  }
}

TEST_CASE("zero epochs leaves the prior") {
  const auto s = MakeSetup();
  auto data = SeparableData(10, 3);
  data.push_back({"lovely", "warm"});  // 6 warm, 5 cold
  ClassifierTrainConfig cfg;
  cfg.epochs = 0;
  const auto clf = TrainClassifier("t", data, s.bag, cfg);
  for (double w : clf.params().weight) CHECK(w == 0.0);
  const auto p = clf.PredictProbaText("table lovely");
  // Add-half smoothed priors: cold (5.5/12), warm (6.5/12).
  CHECK(p[0] == doctest::Approx(5.5 / 12.0).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(6.5 / 12.0).epsilon(1e-12));
}

TEST_CASE("training is deterministic and the loss never rises") {
  const auto s = MakeSetup();
  const auto data = SeparableData(60, 4);
  ClassifierTrainConfig cfg;
  cfg.epochs = 50;
  ClassifierTrainReport report;
  const auto a = TrainClassifier("t", data, s.hidden, cfg, &report);
  const auto b = TrainClassifier("t", data, s.hidden, cfg);
  CHECK(a.params().weight == b.params().weight);
  CHECK(a.params().bias == b.params().bias);
  REQUIRE(report.epoch_losses.size() == 50);
  double prev = report.initial_loss;
  for (double l : report.epoch_losses) {
    CHECK(l <= prev + 1e-6);
    prev = l;
  }
}

TEST_CASE("prediction properties") {
  const auto s = MakeSetup();
  StyleClassifierParams zero;
  zero.style = "t";
  zero.class_names = {"a", "b", "c"};
  zero.rep_dim = s.bag->dim();
  zero.weight.assign(3 * zero.rep_dim, 0.0);
  zero.bias.assign(3, 0.0);
  const StyleClassifier z(zero, s.bag);
  for (double p : z.PredictProbaText("lovely row")) CHECK(p == doctest::Approx(1.0 / 3.0));
  for (TokenId w = 0; w < TokenId(s.vocab->size()); ++w)
    CHECK(z.TokenStyleScore(w, 1) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(z.PredictProbaText(""), Error);

  const auto clf = TrainClassifier("t", SeparableData(40, 5), s.bag, {});
  for (TokenId w = 0; w < TokenId(s.vocab->size()); ++w) {
    const std::vector<TokenId> one = {w};
    const auto p = clf.PredictProba(one);
    double sum = 0.0;
    for (std::size_t c = 0; c < p.size(); ++c) {
      CHECK(clf.TokenStyleScore(w, c) == doctest::Approx(p[c]).epsilon(1e-14));
      CHECK(p[c] >= 0.0);
      CHECK(p[c] <= 1.0);
      sum += p[c];
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }

  // Scaling W by c > 0 with zero bias keeps the argmax.
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n;
  StyleClassifierParams r = zero;
  for (double& w : r.weight) w = n(rng);
  const StyleClassifier base(r, s.bag);
  for (double c : {0.1, 3.0, 25.0}) {
    StyleClassifierParams scaled = r;
    for (double& w : scaled.weight) w *= c;
    const StyleClassifier sc(scaled, s.bag);
    for (const auto& text : {"lovely", "row page", "sunny item field"})
      CHECK(ArgMax(sc.PredictProbaText(text)) == ArgMax(base.PredictProbaText(text)));
  }
}

TEST_CASE("training input errors") {
  const auto s = MakeSetup();
  CHECK_THROWS_AS(TrainClassifier("t", {{"lovely", "warm"}, {"sunny", "warm"}}, s.bag, {}), Error);
  StyleClassifierParams bad;
  bad.class_names = {"only"};
  bad.rep_dim = 2;
  bad.weight = {0, 0};
  bad.bias = {0};
  CHECK_THROWS_AS(bad.Validate(), Error);
}

TEST_CASE("label normalization") {
  CHECK(NormalizeLabel("formal", "1") == "formal");
  CHECK(NormalizeLabel("formal", "0") == "informal");
  CHECK(NormalizeLabel("formal", "True") == "formal");
  CHECK(NormalizeLabel("sentiment", "very positive") == "positive");
  CHECK(NormalizeLabel("empathy", "empathy") == "empathy");
  CHECK(NormalizeLabel("temperature", "warm") == "warm");
}
