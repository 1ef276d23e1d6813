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

#include "stylenlg/style.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

#include "stylenlg/classifier.h"
#include "stylenlg/error.h"
#include "stylenlg/tokenizer.h"

namespace stylenlg {

extern const std::string_view kAdjectiveLexicon;

namespace {

struct StyleInfo {
  Style style;
  std::string_view name;
  std::string_view display;
  std::string_view control;
  std::string_view family;
  std::string_view target;
};

constexpr std::array<StyleInfo, 10> kStyleInfo = {{
    {Style::kShort, "short", "Short", "[LENGTH_SHORT]", "", ""},
    {Style::kLong, "long", "Long", "[LENGTH_LONG]", "", ""},
    {Style::kHasRareWord, "has_rare_word", "Has rare word", "[HAS_RARE_WORD]", "", ""},
    {Style::kFirstPerson, "first_person", "First person pron.", "[FIRST_PERSON]", "", ""},
    {Style::kSecondPerson, "second_person", "Second person pron.", "[SECOND_PERSON]", "",
     ""},
    {Style::kDescriptive, "descriptive", "Descriptive", "[DESCRIPTIVE]", "", ""},
    {Style::kFormal, "formal", "Formal", "[FORMAL]", "formal", "formal"},
    {Style::kNegative, "negative", "Negative", "[NEGATIVE]", "sentiment", "negative"},
    {Style::kPositive, "positive", "Positive", "[POSITIVE]", "sentiment", "positive"},
    {Style::kEmpathy, "empathy", "Empathy", "[EMPATHY]", "empathy", "empathy"},
}};

const StyleInfo& Info(Style style) { return kStyleInfo[static_cast<std::size_t>(style)]; }

bool AnyTokenIn(const std::vector<std::string>& tokens,
                std::initializer_list<std::string_view> words) {
  for (const auto& t : tokens) {
    const std::string lower = ToLower(t);
    for (auto w : words) {
      if (lower == w) return true;
    }
  }
  return false;
}

}  // namespace

bool IsLexical(Style style) { return static_cast<int>(style) <= static_cast<int>(Style::kDescriptive); }
std::string_view StyleName(Style style) { return Info(style).name; }
std::string_view StyleDisplayName(Style style) { return Info(style).display; }
std::string_view ControlToken(Style style) { return Info(style).control; }
std::string_view ClassifierFamily(Style style) { return Info(style).family; }
std::string_view TargetClass(Style style) { return Info(style).target; }

std::optional<Style> StyleFromName(std::string_view name) {
  for (const auto& info : kStyleInfo) {
    if (info.name == name) return info.style;
  }
  return std::nullopt;
}

bool StyleLabels::Get(Style style) const {
  switch (style) {
    case Style::kShort: return short_;
    case Style::kLong: return long_;
    case Style::kHasRareWord: return has_rare_word;
    case Style::kFirstPerson: return first_person;
    case Style::kSecondPerson: return second_person;
    case Style::kDescriptive: return descriptive;
    case Style::kFormal: return formal;
    case Style::kNegative: return negative;
    case Style::kPositive: return positive;
    case Style::kEmpathy: return empathy;
  }
  return false;
}

void StyleLabels::Set(Style style, bool value) {
  switch (style) {
    case Style::kShort: short_ = value; break;
    case Style::kLong: long_ = value; break;
    case Style::kHasRareWord: has_rare_word = value; break;
    case Style::kFirstPerson: first_person = value; break;
    case Style::kSecondPerson: second_person = value; break;
    case Style::kDescriptive: descriptive = value; break;
    case Style::kFormal: formal = value; break;
    case Style::kNegative: negative = value; break;
    case Style::kPositive: positive = value; break;
    case Style::kEmpathy: empathy = value; break;
  }
}

nlohmann::json StyleLabels::ToJson() const {
  nlohmann::json j = nlohmann::json::object();
  for (Style s : kAllStyles) j[std::string(StyleName(s))] = Get(s);
  return j;
}

StyleLabels StyleLabels::FromJson(const nlohmann::json& j) {
  StyleLabels labels;
  for (Style s : kAllStyles) {
    const std::string key(StyleName(s));
    if (j.contains(key)) labels.Set(s, j.at(key).get<bool>());
  }
  return labels;
}

std::vector<std::string> ContentWords(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (t.empty() || IsPlaceholder(t) || IsPunctuationToken(t) || IsSpecialToken(t)) continue;
    out.push_back(ToLower(t));
  }
  return out;
}

NidfTable NidfTable::Build(const std::vector<std::vector<std::string>>& templates) {
  if (templates.size() < 2) throw Error("NIDF needs at least two training templates");
  std::map<std::string, std::size_t, std::less<>> doc_freq;
  for (const auto& tokens : templates) {
    const auto words = ContentWords(tokens);
    const std::set<std::string> unique(words.begin(), words.end());
    for (const auto& w : unique) ++doc_freq[w];
  }
  NidfTable table;
  table.n_templates_ = templates.size();
  const double n = static_cast<double>(templates.size());
  table.idf_min_ = std::numeric_limits<double>::infinity();
  table.idf_max_ = -std::numeric_limits<double>::infinity();
  for (const auto& [word, df] : doc_freq) {
    const double idf = std::log(n / (1.0 + static_cast<double>(df)));
    table.idf_.emplace(word, idf);
    table.idf_min_ = std::min(table.idf_min_, idf);
    table.idf_max_ = std::max(table.idf_max_, idf);
  }
  if (table.idf_.size() < 2 || !(table.idf_max_ > table.idf_min_)) {
    throw Error(
        "NIDF is undefined for this corpus: every word has the same IDF, so "
        "min-max normalization would divide by zero; add more varied templates");
  }
  return table;
}

double NidfTable::Idf(std::string_view word) const {
  auto it = idf_.find(word);
  return it == idf_.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
}

double NidfTable::Nidf(std::string_view word) const {
  auto it = idf_.find(word);
  if (it == idf_.end()) return 1.0;
  return (it->second - idf_min_) / (idf_max_ - idf_min_);
}

NidfTable::MaxResult NidfTable::MaxNidf(const std::vector<std::string>& tokens) const {
  MaxResult result;
  const auto words = ContentWords(tokens);
  if (words.empty()) {
    result.empty_content = true;
    return result;
  }
  for (const auto& w : words) result.value = std::max(result.value, Nidf(w));
  return result;
}

nlohmann::json NidfTable::ToJson() const {
  nlohmann::json idf = nlohmann::json::object();
  for (const auto& [w, v] : idf_) idf[w] = v;
  return {{"n_templates", n_templates_}, {"idf_min", idf_min_}, {"idf_max", idf_max_},
          {"idf", std::move(idf)}};
}

NidfTable NidfTable::FromJson(const nlohmann::json& j) {
  NidfTable table;
  table.n_templates_ = j.at("n_templates").get<std::size_t>();
  table.idf_min_ = j.at("idf_min").get<double>();
  table.idf_max_ = j.at("idf_max").get<double>();
  for (const auto& [w, v] : j.at("idf").items()) table.idf_.emplace(w, v.get<double>());
  if (!(table.idf_max_ > table.idf_min_)) throw Error("NIDF table has a degenerate IDF range");
  return table;
}

int AdjectiveDetector::Count(const std::vector<std::string>& tokens) const {
  int count = 0;
  for (const auto& w : ContentWords(tokens)) {
    if (IsAdjective(w)) ++count;
  }
  return count;
}

LexiconAdjectiveDetector::LexiconAdjectiveDetector() {
  std::istringstream in{std::string(kAdjectiveLexicon)};
  std::string word;
  while (in >> word) lexicon_.insert(word);
  // Frequent nouns and verbs that happen to carry an adjective suffix.
  for (const char* w :
       {"table", "tables", "vegetable", "vegetables", "cable", "hospital", "animal",
        "animals", "music", "arrival", "arrivals", "rental", "rentals", "total",
        "festival", "capital", "interval", "approval", "proposal", "survival",
        "removal", "signal", "journal", "terminal", "hotel", "motel", "relative",
        "representative", "executive", "detective", "objective", "initiative",
        "alternative", "mechanic", "clinic", "topic", "logic", "traffic", "comic",
        "picnic", "republic", "attic", "panic", "tonic", "magic", "fabric", "critic",
        "plastic", "mosaic", "medical", "metal", "pedal", "rival", "sandal", "vial",
        "dial", "trial", "deal", "meal", "meals", "real", "seal", "steal", "veal",
        "heal", "reveal", "appeal", "ideal", "local", "usual", "cereal", "oval",
        "portal", "mental", "dental", "rental", "recital", "tutorial", "material",
        "potential", "official", "individual", "original", "general", "editorial",
        "minimal", "ritual", "spiritual", "manual", "refusal", "referral", "disposal",
        "overall", "recall", "install", "mall", "hall", "call", "ball", "wall", "tall",
        "fall", "small", "all", "stall", "drive", "five", "give", "live", "alive",
        "arrive", "receive", "believe", "olive", "archive", "hive", "dive", "motive",
        "native", "captive", "massive", "ful", "cupful", "mouthful", "handful",
        "spoonful", "us", "bus", "plus", "thus", "famous", "house", "mouse", "nous",
        "ous", "able", "ible", "bible", "ive", "al", "ic"}) {
    suffix_exceptions_.insert(w);
  }
}

bool LexiconAdjectiveDetector::IsAdjective(std::string_view lower_word) const {
  const std::string word(lower_word);
  if (lexicon_.contains(word)) return true;
  if (suffix_exceptions_.contains(word) || word.size() < 5) return false;
  for (std::string_view suffix : {"ous", "ful", "ive", "able", "ible", "al", "ic"}) {
    if (lower_word.ends_with(suffix) && word.size() >= suffix.size() + 3) return true;
  }
  return false;
}

const AdjectiveDetector& DefaultAdjectiveDetector() {
  static const LexiconAdjectiveDetector detector;
  return detector;
}

int TemplateLength(const std::vector<std::string>& tokens) {
  return static_cast<int>(tokens.size());
}

void AnnotateLexical(const std::vector<std::string>& tokens,
                     const LexicalThresholds& thresholds, const NidfTable& table,
                     StyleLabels* labels, const AdjectiveDetector& adjectives) {
  const int length = TemplateLength(tokens);
  labels->short_ = length <= thresholds.short_max_tokens;
  labels->long_ = length >= thresholds.long_min_tokens;
  labels->has_rare_word = table.MaxNidf(tokens).value >= thresholds.rare_nidf_min;
  labels->first_person = AnyTokenIn(tokens, {"i", "me", "my", "mine"});
  labels->second_person = AnyTokenIn(tokens, {"you", "your", "yours"});
  labels->descriptive = adjectives.Count(tokens) > thresholds.descriptive_min_adjectives;
}

StyleLabels AnnotateLexical(std::string_view text, const LexicalThresholds& thresholds,
                            const NidfTable& table) {
  StyleLabels labels;
  AnnotateLexical(Tokenize(text), thresholds, table, &labels);
  return labels;
}

bool BinaryDecision(const std::vector<double>& probs, const std::vector<std::string>& classes,
                    std::string_view target) {
  const auto it = std::find(classes.begin(), classes.end(), target);
  if (it == classes.end()) throw Error("classifier has no class \"" + std::string(target) + "\"");
  const std::size_t t = static_cast<std::size_t>(it - classes.begin());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (i != t && !(probs[t] > probs[i])) return false;
  }
  return true;
}

std::string SentimentDecision(const std::vector<double>& probs,
                              const std::vector<std::string>& classes) {
  double best = -1.0;
  for (double p : probs) best = std::max(best, p);
  std::vector<std::string> winners;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] == best) winners.push_back(classes[i]);
  }
  if (winners.size() != 1) return "neutral";
  const std::string& w = winners.front();
  if (w == "negative" || w == "positive") return w;
  return "neutral";
}

void AnnotateSemantic(std::string_view text, const SemanticClassifiers& classifiers,
                      StyleLabels* labels) {
  if (classifiers.formal == nullptr) throw Error("missing classifier for style: formal");
  if (classifiers.sentiment == nullptr)
    throw Error("missing classifier for style: sentiment (negative/positive)");
  if (classifiers.empathy == nullptr) throw Error("missing classifier for style: empathy");

  const auto& f = *classifiers.formal;
  labels->formal = BinaryDecision(f.PredictProbaText(text), f.class_names(), "formal");
  const auto& s = *classifiers.sentiment;
  const std::string sentiment = SentimentDecision(s.PredictProbaText(text), s.class_names());
  labels->negative = sentiment == "negative";
  labels->positive = sentiment == "positive";
  const auto& e = *classifiers.empathy;
  labels->empathy = BinaryDecision(e.PredictProbaText(text), e.class_names(), "empathy");
}

std::string MergeSentimentLabel(std::string_view label) {
  const std::string l = ToLower(NormalizeWhitespace(label));
  if (l == "very negative" || l == "very_negative" || l == "negative" || l == "0" || l == "1")
    return "negative";
  if (l == "very positive" || l == "very_positive" || l == "positive" || l == "3" || l == "4")
    return "positive";
  if (l == "neutral" || l == "2") return "neutral";
  throw Error("unknown sentiment label: " + std::string(label));
}

std::vector<StyleDistributionRow> CorpusStats(
    const std::vector<std::pair<std::string, std::vector<StyleLabels>>>& splits) {
  std::vector<StyleDistributionRow> rows;
  for (const auto& [name, labels] : splits) {
    StyleDistributionRow row;
    row.split = name;
    row.count = labels.size();
    row.empty = labels.empty();
    if (!labels.empty()) {
      for (std::size_t s = 0; s < kAllStyles.size(); ++s) {
        std::size_t hits = 0;
        for (const auto& l : labels) hits += l.Get(kAllStyles[s]) ? 1 : 0;
        row.percent[s] = 100.0 * static_cast<double>(hits) / static_cast<double>(labels.size());
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string FormatCorpusStats(const std::vector<StyleDistributionRow>& rows) {
  std::ostringstream out;
  out << "| Style |";
  for (const auto& r : rows) out << ' ' << r.split << (r.empty ? " (empty)" : "") << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < rows.size(); ++i) out << "---|";
  out << '\n';
  out << std::fixed << std::setprecision(2);
  for (std::size_t s = 0; s < kAllStyles.size(); ++s) {
    out << "| " << StyleDisplayName(kAllStyles[s]) << " |";
    for (const auto& r : rows) out << ' ' << r.percent[s] << "% |";
    out << '\n';
  }
  return out.str();
}

}  // namespace stylenlg
