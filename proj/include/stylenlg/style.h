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

#ifndef STYLENLG_STYLE_H_
#define STYLENLG_STYLE_H_

// Lexical and semantic style annotation of templates.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"

namespace stylenlg {

class StyleClassifier;

enum class Style {
  kShort,
  kLong,
  kHasRareWord,
  kFirstPerson,
  kSecondPerson,
  kDescriptive,
  kFormal,
  kNegative,
  kPositive,
  kEmpathy,
};

inline constexpr std::array<Style, 10> kAllStyles = {
    Style::kShort,       Style::kLong,     Style::kHasRareWord, Style::kFirstPerson,
    Style::kSecondPerson, Style::kDescriptive, Style::kFormal,   Style::kNegative,
    Style::kPositive,    Style::kEmpathy};

bool IsLexical(Style style);
std::string_view StyleName(Style style);        // "short", "has_rare_word", ...
std::string_view StyleDisplayName(Style style);  // "Short", "Has rare word", ...
std::optional<Style> StyleFromName(std::string_view name);
std::string_view ControlToken(Style style);  // "[LENGTH_SHORT]", ...

// Semantic styles are read off a classifier family: formal -> "formal",
// negative/positive -> "sentiment", empathy -> "empathy".
std::string_view ClassifierFamily(Style style);
// The class a semantic style targets within its family's classifier.
std::string_view TargetClass(Style style);

struct StyleLabels {
  bool short_ = false;
  bool long_ = false;
  bool has_rare_word = false;
  bool first_person = false;
  bool second_person = false;
  bool descriptive = false;
  bool formal = false;
  bool negative = false;
  bool positive = false;
  bool empathy = false;

  bool Get(Style style) const;
  void Set(Style style, bool value);
  nlohmann::json ToJson() const;
  static StyleLabels FromJson(const nlohmann::json& j);
};

struct LexicalThresholds {
  int short_max_tokens = 7;
  int long_min_tokens = 15;
  double rare_nidf_min = 0.5;
  int descriptive_min_adjectives = 2;  // strictly greater than
};

// Lower-cased content words of a template: placeholders, punctuation and
// special tokens removed.
std::vector<std::string> ContentWords(const std::vector<std::string>& tokens);

class NidfTable {
 public:
  // Throws Error if fewer than two templates or if every word has the same
  // IDF (min-max normalization undefined).
  static NidfTable Build(const std::vector<std::vector<std::string>>& templates);

  double Idf(std::string_view word) const;  // NaN for unseen words
  // Unseen words are treated as the rarest: 1.0.
  double Nidf(std::string_view word) const;

  struct MaxResult {
    double value = 0.0;
    bool empty_content = false;
  };
  MaxResult MaxNidf(const std::vector<std::string>& tokens) const;

  double idf_min() const { return idf_min_; }
  double idf_max() const { return idf_max_; }
  std::size_t n_templates() const { return n_templates_; }
  const std::map<std::string, double, std::less<>>& idf() const { return idf_; }

  nlohmann::json ToJson() const;
  static NidfTable FromJson(const nlohmann::json& j);

 private:
  std::map<std::string, double, std::less<>> idf_;
  double idf_min_ = 0.0;
  double idf_max_ = 0.0;
  std::size_t n_templates_ = 0;
};

// Counts adjectives with a bundled lexicon plus suffix heuristics for words
// outside it.
class AdjectiveDetector {
 public:
  virtual ~AdjectiveDetector() = default;
  virtual bool IsAdjective(std::string_view lower_word) const = 0;
  int Count(const std::vector<std::string>& tokens) const;
};

class LexiconAdjectiveDetector : public AdjectiveDetector {
 public:
  LexiconAdjectiveDetector();
  bool IsAdjective(std::string_view lower_word) const override;
  std::size_t lexicon_size() const { return lexicon_.size(); }

 private:
  std::unordered_set<std::string> lexicon_;
  std::unordered_set<std::string> suffix_exceptions_;
};

const AdjectiveDetector& DefaultAdjectiveDetector();

// Token count includes placeholders and punctuation.
int TemplateLength(const std::vector<std::string>& tokens);

// Sets the six lexical fields of *labels.
void AnnotateLexical(const std::vector<std::string>& tokens,
                     const LexicalThresholds& thresholds, const NidfTable& table,
                     StyleLabels* labels,
                     const AdjectiveDetector& adjectives = DefaultAdjectiveDetector());
StyleLabels AnnotateLexical(std::string_view text, const LexicalThresholds& thresholds,
                            const NidfTable& table);

// Classifier families keyed "formal", "sentiment", "empathy".
struct SemanticClassifiers {
  const StyleClassifier* formal = nullptr;
  const StyleClassifier* sentiment = nullptr;
  const StyleClassifier* empathy = nullptr;
};

// Decides semantic labels from class distributions. Binary families are
// positive when the target class has strictly higher probability than every
// other class. Sentiment ties resolve to neutral.
bool BinaryDecision(const std::vector<double>& probs,
                    const std::vector<std::string>& classes,
                    std::string_view target);
// Returns "negative", "neutral" or "positive".
std::string SentimentDecision(const std::vector<double>& probs,
                              const std::vector<std::string>& classes);

// Throws Error naming the style whose classifier is missing.
void AnnotateSemantic(std::string_view text, const SemanticClassifiers& classifiers,
                      StyleLabels* labels);

// SST-style label merging: "very negative"/"negative" -> "negative",
// "very positive"/"positive" -> "positive", "neutral" kept. Numeric 0..4
// labels are accepted.
std::string MergeSentimentLabel(std::string_view label);

struct StyleDistributionRow {
  std::string split;
  std::size_t count = 0;
  std::array<double, 10> percent{};  // indexed like kAllStyles
  bool empty = false;
};

std::vector<StyleDistributionRow> CorpusStats(
    const std::vector<std::pair<std::string, std::vector<StyleLabels>>>& splits);
// Markdown table: one row per style, one column per split.
std::string FormatCorpusStats(const std::vector<StyleDistributionRow>& rows);

}  // namespace stylenlg

#endif  // STYLENLG_STYLE_H_
