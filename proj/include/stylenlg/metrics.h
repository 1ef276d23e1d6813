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

#ifndef STYLENLG_METRICS_H_
#define STYLENLG_METRICS_H_

// Automatic metrics: style accuracy, corpus BLEU and slot error rate, plus the
// markdown report and the lexicalized human-evaluation worksheet.

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "stylenlg/corpus.h"
#include "stylenlg/style.h"

namespace stylenlg {

// conforming / total. Throws Error for an empty set.
double StyleAccuracy(const std::vector<bool>& conforms);

// Rule check for lexical styles, via AnnotateLexical.
bool LexicalConforms(Style style, const std::vector<std::string>& tokens,
                     const LexicalThresholds& thresholds, const NidfTable& table);
// Classifier check: the argmax class equals `target_class`.
bool SemanticConforms(const StyleClassifier& classifier, std::string_view target_class,
                      std::string_view text);

struct BleuConfig {
  int max_n = 4;
  double epsilon = 1e-9;  // replaces zero n-gram precisions
};

struct BleuResult {
  double bleu = 0.0;
  std::vector<double> precisions;
  double brevity_penalty = 1.0;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;
};

using TokenSeq = std::vector<std::string>;

// Corpus BLEU with clipped counts against every reference of a candidate and
// the closest reference length (shorter wins ties). Throws Error for an empty
// corpus or mismatched lists.
BleuResult CorpusBleu(const std::vector<TokenSeq>& candidates,
                      const std::vector<std::vector<TokenSeq>>& references,
                      const BleuConfig& config = {});
double Bleu(const std::vector<TokenSeq>& candidates,
            const std::vector<std::vector<TokenSeq>>& references, const BleuConfig& config = {});

struct SerBreakdown {
  int deletions = 0;
  int repetitions = 0;
  int hallucinations = 0;
  int total_slots = 0;
  double ser = 0.0;

  int mistakes() const { return deletions + repetitions + hallucinations; }
  bool operator==(const SerBreakdown&) const = default;
};

// Deletions: MR placeholders missing from the output. Repetitions: MR
// placeholders that occur two or more times. Hallucinations: distinct output
// placeholders absent from the MR. The ratio divides by the number of MR
// placeholders, or by 1 when the MR has none.
SerBreakdown Ser(const std::set<std::string>& mr_placeholders,
                 const std::vector<std::string>& output_tokens);
SerBreakdown Ser(const MeaningRepresentation& mr, std::string_view output);

struct SerSummary {
  double micro = 0.0;  // total mistakes / total slots
  double macro = 0.0;  // mean of per-example ratios
  int deletions = 0;
  int repetitions = 0;
  int hallucinations = 0;
  int total_slots = 0;
};
SerSummary SummarizeSer(const std::vector<SerBreakdown>& rows);

struct EvalRow {
  std::string style;
  std::string method;
  double style_accuracy = 0.0;
  double bleu = 0.0;
  double ser = 0.0;
  std::string checker;  // "rule" or "classifier"
};

// Style | Model | Style Acc. | BLEU | SER, accuracies and SER as percentages.
std::string EmitReport(const std::vector<EvalRow>& rows);

struct WorksheetRow {
  std::string domain;
  std::string mr;      // simplified MR, bracketed values
  std::string output;  // lexicalized, bracketed values
};

// "confirm restaurant_name [Ala Romana]; confirm date [March 1st]".
std::string SimplifiedMr(const MeaningRepresentation& mr, const SlotValueMap& values);
WorksheetRow MakeWorksheetRow(const MeaningRepresentation& mr, const SlotValueMap& values,
                              std::string_view output_template);
// Tab-separated with header "Domain\tMR\tOutput".
void EmitWorksheet(const std::vector<WorksheetRow>& rows, std::ostream& out);

}  // namespace stylenlg

#endif  // STYLENLG_METRICS_H_
