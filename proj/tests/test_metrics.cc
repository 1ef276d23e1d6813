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
#include <sstream>

#include "doctest.h"
#include "oracles.h"
#include "ser_cases.h"
#include "stylenlg/error.h"
#include "stylenlg/metrics.h"
#include "stylenlg/tokenizer.h"

using namespace stylenlg;

namespace {

TokenSeq Words(const std::string& s) { return Tokenize(s); }

}  // namespace

TEST_CASE("slot error rate on the hand-built fixture") {
  REQUIRE(testing::SerCases().size() == 20);
  for (std::size_t i = 0; i < testing::SerCases().size(); ++i) {
    const auto& c = testing::SerCases()[i];
    CAPTURE(i);
    CAPTURE(c.output);
    const auto got = Ser(c.mr, Tokenize(c.output));
    CHECK(got.deletions == c.expect.deletions);
    CHECK(got.repetitions == c.expect.repetitions);
    CHECK(got.hallucinations == c.expect.hallucinations);
    CHECK(got.total_slots == c.expect.total_slots);
    CHECK(got.ser == doctest::Approx(c.expect.ser).epsilon(1e-15));
  }
}

TEST_CASE("slot error rate summaries") {
  std::vector<SerBreakdown> rows;
  int mistakes = 0, slots = 0;
  double ratio_sum = 0.0;
  for (const auto& c : testing::SerCases()) {
    rows.push_back(Ser(c.mr, Tokenize(c.output)));
    mistakes += c.expect.deletions + c.expect.repetitions + c.expect.hallucinations;
    slots += c.expect.total_slots;
    ratio_sum += c.expect.ser;
  }
  const auto s = SummarizeSer(rows);
  CHECK(s.total_slots == slots);
  CHECK(s.micro == doctest::Approx(double(mistakes) / slots).epsilon(1e-15));
  CHECK(s.macro == doctest::Approx(ratio_sum / 20.0).epsilon(1e-15));
  CHECK(s.deletions + s.repetitions + s.hallucinations == mistakes);
  const auto empty = SummarizeSer({});
  CHECK(empty.micro == 0.0);
}

TEST_CASE("slot error rate ignores ordinary words") {
  std::mt19937_64 rng(2);
  const std::vector<std::string> filler = {"the", "a", "slot", "$", "here", "."};
  for (const auto& c : testing::SerCases()) {
    auto tokens = Tokenize(c.output);
    for (int k = 0; k < 5; ++k)
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(rng() % (tokens.size() + 1)),
                    filler[rng() % filler.size()]);
    CHECK(Ser(c.mr, tokens) == Ser(c.mr, Tokenize(c.output)));
  }
}

TEST_CASE("slot error rate from a meaning representation") {
  MeaningRepresentation mr{"Restaurants",
                           {{"OFFER", "restaurant_name", std::nullopt, "$slot1"},
                            {"OFFER", "city", std::nullopt, "$slot2"},
                            {"REQUEST", "time", std::nullopt, "none"}}};
  const auto b = Ser(mr, "$slot1 is in $slot1.");
  CHECK(b.deletions == 1);
  CHECK(b.repetitions == 1);
  CHECK(b.total_slots == 2);
  CHECK(b.ser == 1.0);
}

TEST_CASE("BLEU reference cases") {
  const auto cand = Words("the cat sat on the mat");
  CHECK(Bleu({cand}, {{cand}}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(Bleu({Words("a b c d e")}, {{Words("v w x y z")}}) <= 1e-6);

  BleuConfig uni;
  uni.max_n = 1;
  const auto bp = CorpusBleu({Words("the cat")}, {{Words("the cat sat")}}, uni);
  CHECK(bp.precisions[0] == 1.0);
  CHECK(std::abs(bp.bleu - std::exp(-0.5)) <= 1e-9);
  CHECK(std::abs(bp.brevity_penalty - std::exp(-0.5)) <= 1e-9);

  // Clipping against the most generous reference.
  const auto clip = CorpusBleu({Words("the the the the")},
                               {{Words("the cat"), Words("the the dog")}}, uni);
  CHECK(clip.precisions[0] == doctest::Approx(0.5).epsilon(1e-15));

  // Closest reference length, shorter on a tie.
  const auto tie = CorpusBleu({Words("a b c")}, {{Words("a b c d"), Words("a b")}}, uni);
  CHECK(tie.reference_length == 2);
  CHECK(tie.brevity_penalty == 1.0);
  const auto longer = CorpusBleu({Words("a b c")}, {{Words("a b c d e"), Words("a b c d e f")}}, uni);
  CHECK(longer.reference_length == 5);
  CHECK(longer.brevity_penalty == doctest::Approx(std::exp(1.0 - 5.0 / 3.0)).epsilon(1e-12));

  CHECK_THROWS_AS(Bleu({}, {}), Error);
  CHECK_THROWS_AS(Bleu({cand}, {}), Error);
}

TEST_CASE("BLEU agrees with an independent implementation") {
  std::mt19937_64 rng(21);
  const std::vector<std::string> words = {"a", "b", "c", "d", "e", "f"};
  auto sentence = [&](std::size_t min_len) {
    TokenSeq s;
    const std::size_t len = min_len + rng() % 8;
    for (std::size_t i = 0; i < len; ++i) s.push_back(words[rng() % words.size()]);
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<TokenSeq> cands;
    std::vector<std::vector<TokenSeq>> refs(n);
    for (std::size_t i = 0; i < n; ++i) {
      cands.push_back(sentence(1));
      const std::size_t r = 1 + rng() % 3;
      for (std::size_t j = 0; j < r; ++j) refs[i].push_back(sentence(1));
    }
    for (int max_n : {1, 2, 4}) {
      BleuConfig cfg;
      cfg.max_n = max_n;
      const double got = Bleu(cands, refs, cfg);
      const double want = testing::NaiveBleu(cands, refs, max_n, cfg.epsilon);
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
      CHECK(got >= 0.0);
      CHECK(got <= 1.0);
    }
  }
}

TEST_CASE("style accuracy") {
  CHECK(StyleAccuracy(std::vector<bool>(5, true)) == 1.0);
  std::vector<bool> v(1000, false);
  for (int i = 0; i < 964; ++i) v[i] = true;
  CHECK(StyleAccuracy(v) == doctest::Approx(0.964).epsilon(1e-15));
  CHECK_THROWS_AS(StyleAccuracy({}), Error);

  const auto table = NidfTable::Build({{"a", "b"}, {"a", "c"}, {"a"}});
  const LexicalThresholds th;
  CHECK(LexicalConforms(Style::kShort, Words("ok ."), th, table));
  CHECK_THROWS_AS(LexicalConforms(Style::kPositive, Words("ok ."), th, table), Error);

  // The checker and the annotator are one rule.
  std::mt19937_64 rng(6);
  const std::vector<std::string> pool = {"i", "you", "b", "a", "cheap", "quiet", "lovely", "x", "."};
  for (int trial = 0; trial < 200; ++trial) {
    TokenSeq toks;
    const std::size_t len = rng() % 20;
    for (std::size_t i = 0; i < len; ++i) toks.push_back(pool[rng() % pool.size()]);
    StyleLabels labels;
    AnnotateLexical(toks, th, table, &labels);
    for (Style s : kAllStyles) {
      if (!IsLexical(s)) continue;
      CHECK(LexicalConforms(s, toks, th, table) == labels.Get(s));
    }
  }
}

TEST_CASE("report table") {
  const auto one = EmitReport({{"Positive", "bswd", 0.5, 0.71594, 0.125, "classifier"}});
  CHECK(one ==
        "| Style | Model | Style Acc. | BLEU | SER |\n|---|---|---|---|---|\n"
        "| Positive | bswd | 50.00% (classifier) | 0.7159 | 12.50% |\n");
  CHECK(EmitReport({}) == "| Style | Model | Style Acc. | BLEU | SER |\n|---|---|---|---|---|\n");
}

TEST_CASE("human evaluation worksheet") {
  MeaningRepresentation mr{"Restaurants",
                           {{"CONFIRM", "restaurant_name", std::nullopt, "$slot1"},
                            {"CONFIRM", "date", std::nullopt, "$slot2"}}};
  const SlotValueMap values{{"$slot1", "Ala Romana"}, {"$slot2", "March 1st"}};
  CHECK(SimplifiedMr(mr, values) ==
        "confirm restaurant_name [Ala Romana]; confirm date [March 1st]");
  const auto row = MakeWorksheetRow(mr, values, "Please confirm: booking a table at $slot1 on $slot2.");
  CHECK(row.domain == "Restaurants");
  CHECK(row.output == "Please confirm: booking a table at [Ala Romana] on [March 1st].");
  // A hallucinated placeholder stays visible.
  CHECK(MakeWorksheetRow(mr, values, "$slot3 is booked.").output.find("$slot3") != std::string::npos);

  std::ostringstream out;
  EmitWorksheet({row}, out);
  CHECK(out.str() ==
        "Domain\tMR\tOutput\nRestaurants\tconfirm restaurant_name [Ala Romana]; confirm date "
        "[March 1st]\tPlease confirm: booking a table at [Ala Romana] on [March 1st].\n");
  std::ostringstream empty;
  EmitWorksheet({}, empty);
  CHECK(empty.str() == "Domain\tMR\tOutput\n");
}
