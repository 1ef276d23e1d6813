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

#include <filesystem>
#include <random>

#include "doctest.h"
#include "stylenlg/error.h"
#include "stylenlg/model_io.h"
#include "stylenlg/nplm.h"

using namespace stylenlg;

namespace {

std::shared_ptr<Vocabulary> SmallVocab() {
  return std::make_shared<Vocabulary>(
      Vocabulary::Build({"[BOS] [LENGTH_SHORT] red green blue [SEP] red red blue [EOS]"}, 1));
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("stylenlg_test_" + name)).string();
}

std::string Replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("nplm round trip is exact") {
  const auto vocab = SmallVocab();
  NplmShape shape{vocab->size(), 3, 4, 5};
  Nplm model(NplmParams::Random(shape, 77));
  const std::map<std::string, std::string> params = {{"method", "ct"}, {"note", "two words"}};
  const auto text = SerializeLanguageModel(*vocab, model, params);
  const auto back = ParseLanguageModel(text);
  CHECK(back.kind == "nplm");
  REQUIRE(back.nplm != nullptr);
  CHECK(back.nplm->params() == model.params());
  CHECK(back.vocab->tokens() == vocab->tokens());
  CHECK(back.vocab->IsControl(back.vocab->Id("[LENGTH_SHORT]")));
  CHECK(back.params.at("method") == "ct");
  CHECK(back.params.at("note") == "two words");
  CHECK(SerializeLanguageModel(*back.vocab, *back.model, back.params) == text);
}

TEST_CASE("n-gram round trip preserves distributions") {
  const auto vocab = SmallVocab();
  const std::vector<std::vector<TokenId>> corpus = {
      vocab->EncodeString("[BOS] red green blue [SEP] red red blue [EOS]"),
      vocab->EncodeString("[BOS] blue [SEP] green [EOS]")};
  const auto model = NGramModel::Train(corpus, vocab->size(), 3, 0.1);
  const auto back = ParseLanguageModel(SerializeLanguageModel(*vocab, model));
  CHECK(back.kind == "ngram");
  CHECK(back.nplm == nullptr);
  for (const auto& seq : corpus) {
    for (std::size_t t = 1; t <= seq.size(); ++t) {
      const std::span<const TokenId> h(seq.data(), t);
      CHECK(back.model->NextDistribution(h) == model.NextDistribution(h));
    }
  }
}

TEST_CASE("classifier round trip") {
  const auto vocab = SmallVocab();
  auto nplm = std::make_shared<Nplm>(NplmParams::Random({vocab->size(), 2, 3, 4}, 5));
  auto provider = std::make_shared<RepresentationProvider>(
      RepresentationProvider::Mode::kNplmHidden, nplm, vocab);
  StyleClassifierParams p;
  p.style = "sentiment";
  p.class_names = {"negative", "neutral", "positive"};
  p.rep_dim = provider->dim();
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  for (std::size_t i = 0; i < 3 * p.rep_dim; ++i) p.weight.push_back(n(rng));
  p.bias = {0.1, -0.2, 1e-17};
  const StyleClassifier clf(p, provider);
  const auto back = ParseClassifier(SerializeClassifier(clf));
  CHECK(back.params().weight == p.weight);
  CHECK(back.params().bias == p.bias);
  CHECK(back.class_names() == p.class_names);
  CHECK(back.style() == "sentiment");
  CHECK(back.provider().mode() == RepresentationProvider::Mode::kNplmHidden);
  CHECK(back.provider().nplm().params() == nplm->params());
  CHECK(back.PredictProbaText("red blue") == clf.PredictProbaText("red blue"));
}

TEST_CASE("files on disk") {
  const auto vocab = SmallVocab();
  Nplm model(NplmParams::Random({vocab->size(), 2, 3, 4}, 8));
  const auto path = TempPath("lm.txt");
  SaveLanguageModel(path, *vocab, model);
  CHECK(LoadLanguageModel(path).nplm->params() == model.params());
  std::filesystem::remove(path);

  try {
    LoadLanguageModel(TempPath("does_not_exist"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("does_not_exist") != std::string::npos);
  }
  CHECK_THROWS_AS(WriteTextFile("/nonexistent_dir/x/y.txt", "z"), Error);
}

TEST_CASE("malformed model files are rejected") {
  const auto vocab = SmallVocab();
  Nplm model(NplmParams::Random({vocab->size(), 2, 3, 4}, 9));
  const auto good = SerializeLanguageModel(*vocab, model);

  CHECK_THROWS_AS(ParseLanguageModel(""), ModelFormatError);
  CHECK_THROWS_AS(ParseLanguageModel("something else\n"), ModelFormatError);
  CHECK_THROWS_AS(ParseLanguageModel(good.substr(0, good.size() / 2)), ModelFormatError);
  CHECK_THROWS_AS(ParseLanguageModel(Replace(good, "\nend", "\nbogus 1\nend")), ModelFormatError);
  CHECK_THROWS_AS(ParseLanguageModel(Replace(good, "kind nplm", "kind lstm")), ModelFormatError);

  // A corrupted number names its line.
  const auto block = good.find("block b1");
  REQUIRE(block != std::string::npos);
  const auto row = good.find('\n', block) + 1;
  std::string bad = good;
  bad.replace(row, 1, "x");
  try {
    ParseLanguageModel(bad);
    FAIL("expected ModelFormatError");
  } catch (const ModelFormatError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }

  // A language model is not a classifier.
  CHECK_THROWS_AS(ParseClassifier(good), ModelFormatError);
}
