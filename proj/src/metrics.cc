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

#include "stylenlg/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>

#include "stylenlg/classifier.h"
#include "stylenlg/error.h"
#include "stylenlg/generate.h"
#include "stylenlg/tokenizer.h"

namespace stylenlg {

double StyleAccuracy(const std::vector<bool>& conforms) {
  if (conforms.empty()) throw Error("style accuracy of an empty output set");
  const auto n = std::count(conforms.begin(), conforms.end(), true);
  return static_cast<double>(n) / static_cast<double>(conforms.size());
}

bool LexicalConforms(Style style, const std::vector<std::string>& tokens,
                     const LexicalThresholds& thresholds, const NidfTable& table) {
  if (!IsLexical(style)) throw Error("not a lexical style: " + std::string(StyleName(style)));
  StyleLabels labels;
  AnnotateLexical(tokens, thresholds, table, &labels);
  return labels.Get(style);
}

bool SemanticConforms(const StyleClassifier& classifier, std::string_view target_class,
                      std::string_view text) {
  const int target = classifier.ClassIndex(target_class);
  if (target < 0) throw Error("classifier has no class " + std::string(target_class));
  const auto ids = classifier.provider().Encode(text);
  if (ids.empty()) return false;
  return ArgMax(classifier.PredictProba(ids)) == static_cast<std::size_t>(target);
}

namespace {

using NgramCounts = std::map<std::vector<std::string>, int>;

NgramCounts CountNgrams(const TokenSeq& tokens, std::size_t n) {
  NgramCounts counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i)
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  return counts;
}

}  // namespace

BleuResult CorpusBleu(const std::vector<TokenSeq>& candidates,
                      const std::vector<std::vector<TokenSeq>>& references,
                      const BleuConfig& config) {
  if (candidates.empty()) throw Error("BLEU of an empty candidate corpus");
  if (candidates.size() != references.size())
    throw Error("BLEU needs one reference set per candidate");
  if (config.max_n < 1) throw Error("BLEU max n must be >= 1");
  const auto max_n = static_cast<std::size_t>(config.max_n);
  std::vector<double> matched(max_n, 0.0), total(max_n, 0.0);
  BleuResult r;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& cand = candidates[i];
    const auto& refs = references[i];
    if (refs.empty()) throw Error("candidate " + std::to_string(i) + " has no references");
    r.candidate_length += cand.size();
    std::size_t best_len = refs.front().size();
    for (const auto& ref : refs) {
      const auto diff = [&](std::size_t len) {
        return len > cand.size() ? len - cand.size() : cand.size() - len;
      };
      if (diff(ref.size()) < diff(best_len) ||
          (diff(ref.size()) == diff(best_len) && ref.size() < best_len))
        best_len = ref.size();
    }
    r.reference_length += best_len;
    for (std::size_t n = 1; n <= max_n; ++n) {
      const auto cand_counts = CountNgrams(cand, n);
      NgramCounts max_ref;
      for (const auto& ref : refs) {
        for (const auto& [gram, c] : CountNgrams(ref, n)) max_ref[gram] = std::max(max_ref[gram], c);
      }
      for (const auto& [gram, c] : cand_counts) {
        auto it = max_ref.find(gram);
        matched[n - 1] += std::min(c, it == max_ref.end() ? 0 : it->second);
        total[n - 1] += c;
      }
    }
  }
  double log_sum = 0.0;
  for (std::size_t n = 0; n < max_n; ++n) {
    double p = total[n] > 0.0 ? matched[n] / total[n] : 0.0;
    if (p == 0.0) p = config.epsilon;
    r.precisions.push_back(p);
    log_sum += std::log(p);
  }
  const double c = static_cast<double>(r.candidate_length);
  const double ref_len = static_cast<double>(r.reference_length);
  if (c == 0.0) {
    r.brevity_penalty = 0.0;
  } else if (c < ref_len) {
    r.brevity_penalty = std::exp(1.0 - ref_len / c);
  }
  r.bleu = r.brevity_penalty * std::exp(log_sum / static_cast<double>(max_n));
  r.bleu = std::clamp(r.bleu, 0.0, 1.0);
  return r;
}

double Bleu(const std::vector<TokenSeq>& candidates,
            const std::vector<std::vector<TokenSeq>>& references, const BleuConfig& config) {
  return CorpusBleu(candidates, references, config).bleu;
}

SerBreakdown Ser(const std::set<std::string>& mr_placeholders,
                 const std::vector<std::string>& output_tokens) {
  std::map<std::string, int> counts;
  for (const auto& t : output_tokens) {
    if (IsPlaceholder(t)) ++counts[t];
  }
  SerBreakdown b;
  b.total_slots = static_cast<int>(mr_placeholders.size());
  for (const auto& p : mr_placeholders) {
    auto it = counts.find(p);
    if (it == counts.end()) {
      ++b.deletions;
    } else if (it->second >= 2) {
      ++b.repetitions;
    }
  }
  for (const auto& [p, c] : counts) {
    if (!mr_placeholders.contains(p)) ++b.hallucinations;
  }
  b.ser = static_cast<double>(b.mistakes()) / static_cast<double>(std::max(b.total_slots, 1));
  return b;
}

SerBreakdown Ser(const MeaningRepresentation& mr, std::string_view output) {
  const auto ph = mr.Placeholders();
  return Ser(std::set<std::string>(ph.begin(), ph.end()), Tokenize(output));
}

SerSummary SummarizeSer(const std::vector<SerBreakdown>& rows) {
  SerSummary s;
  if (rows.empty()) return s;
  int mistakes = 0;
  double macro = 0.0;
  for (const auto& r : rows) {
    s.deletions += r.deletions;
    s.repetitions += r.repetitions;
    s.hallucinations += r.hallucinations;
    s.total_slots += r.total_slots;
    mistakes += r.mistakes();
    macro += r.ser;
  }
  s.micro = static_cast<double>(mistakes) / static_cast<double>(std::max(s.total_slots, 1));
  s.macro = macro / static_cast<double>(rows.size());
  return s;
}

namespace {

std::string Percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", v * 100.0);
  return buf;
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string EmitReport(const std::vector<EvalRow>& rows) {
  std::string out = "| Style | Model | Style Acc. | BLEU | SER |\n|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out += "| " + r.style + " | " + r.method + " | " + Percent(r.style_accuracy);
    if (!r.checker.empty()) out += " (" + r.checker + ")";
    out += " | " + Fixed(r.bleu) + " | " + Percent(r.ser) + " |\n";
  }
  return out;
}

std::string SimplifiedMr(const MeaningRepresentation& mr, const SlotValueMap& values) {
  std::string out;
  for (const auto& f : mr.frames) {
    if (!out.empty()) out += "; ";
    out += ToLower(f.act);
    if (f.slot) out += " " + *f.slot;
    if (!f.value) continue;
    auto it = values.find(*f.value);
    out += " " + (it != values.end() ? "[" + it->second + "]" : *f.value);
  }
  return out;
}

WorksheetRow MakeWorksheetRow(const MeaningRepresentation& mr, const SlotValueMap& values,
                              std::string_view output_template) {
  WorksheetRow row;
  row.domain = mr.domain;
  row.mr = SimplifiedMr(mr, values);
  // Hallucinated placeholders stay visible instead of aborting the sheet.
  const Template tmpl{std::string(output_template)};
  SlotValueMap filled = values;
  for (const auto& slot : tmpl.slots_used()) filled.try_emplace(slot, slot);
  row.output = Lexicalize(tmpl, filled, LexicalizeMode::kBracketed);
  return row;
}

void EmitWorksheet(const std::vector<WorksheetRow>& rows, std::ostream& out) {
  auto clean = [](std::string s) {
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
  };
  out << "Domain\tMR\tOutput\n";
  for (const auto& r : rows)
    out << clean(r.domain) << '\t' << clean(r.mr) << '\t' << clean(r.output) << '\n';
  if (!out) throw Error("failed to write worksheet");
}

}  // namespace stylenlg
