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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stylenlg/classifier.h"
#include "stylenlg/corpus.h"
#include "stylenlg/decoding.h"
#include "stylenlg/error.h"
#include "stylenlg/metrics.h"
#include "stylenlg/model_io.h"
#include "stylenlg/pipeline.h"
#include "stylenlg/pplm.h"
#include "stylenlg/run_config.h"
#include "stylenlg/style.h"
#include "stylenlg/tokenizer.h"

namespace stylenlg::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

// Raised for flag combinations that violate a documented constraint.
class UsageError : public Error {
 public:
  explicit UsageError(std::vector<std::string> diagnostics)
      : Error(Join(diagnostics)), diagnostics_(std::move(diagnostics)) {}
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  static std::string Join(const std::vector<std::string>& d) {
    std::string out;
    for (const auto& s : d) out += (out.empty() ? "" : "; ") + s;
    return out;
  }
  std::vector<std::string> diagnostics_;
};

struct Globals {
  std::uint64_t seed = 1;
  bool quiet = false;
  std::ostream* err = nullptr;

  void Log(const std::string& line) const {
    if (!quiet) *err << line << "\n";
  }
};

std::string Format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

StyleRequest ParseStyleArg(const std::string& text) {
  try {
    return ParseStyleRequest(text);
  } catch (const Error& e) {
    throw UsageError({e.what()});
  }
}

std::vector<CorpusExample> ReadCorpus(const std::string& path) {
  std::vector<CorpusExample> out;
  for (const auto& row : ReadJsonLines(path)) out.push_back(ExampleFromJson(row));
  return out;
}

// Classifiers keyed by family ("sentiment", ...).
std::map<std::string, std::shared_ptr<StyleClassifier>> LoadClassifiers(
    const std::vector<std::string>& paths) {
  std::map<std::string, std::shared_ptr<StyleClassifier>> out;
  for (const auto& p : paths) {
    auto clf = std::make_shared<StyleClassifier>(LoadClassifier(p));
    const std::string family = clf->style();
    if (!out.emplace(family, clf).second)
      throw UsageError({"two classifiers given for family " + family});
  }
  return out;
}

const StyleClassifier& ClassifierFor(
    Style style, const std::map<std::string, std::shared_ptr<StyleClassifier>>& classifiers) {
  const std::string family(ClassifierFamily(style));
  auto it = classifiers.find(family);
  if (it == classifiers.end())
    throw UsageError({"style " + std::string(StyleName(style)) + " needs a " + family +
                      " classifier (--classifier)"});
  return *it->second;
}

std::size_t TargetIndex(const StyleClassifier& clf, Style style) {
  const int idx = clf.ClassIndex(TargetClass(style));
  if (idx < 0)
    throw Error("classifier for " + clf.style() + " has no class " +
                std::string(TargetClass(style)));
  return static_cast<std::size_t>(idx);
}

// ---------------------------------------------------------------- preprocess

struct PreprocessArgs {
  std::string in;
  std::string schema;
  std::string out;
  std::string stats;
};

int RunPreprocess(const PreprocessArgs& a, const Globals& g) {
  std::string schema_path = a.schema;
  std::vector<std::string> files;
  if (fs::is_directory(a.in)) {
    if (schema_path.empty()) schema_path = (fs::path(a.in) / "schema.json").string();
    for (const auto& entry : fs::directory_iterator(a.in)) {
      const auto name = entry.path().filename().string();
      if (entry.is_regular_file() && name.rfind("dialogues_", 0) == 0 &&
          entry.path().extension() == ".json")
        files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error("no dialogues_*.json files in " + a.in);
  } else {
    if (!fs::exists(a.in)) throw Error("cannot open " + a.in);
    if (schema_path.empty()) throw UsageError({"--schema is required when --in is a file"});
    files.push_back(a.in);
  }
  SchemaIndex schema;
  schema.AddServices(json::parse(ReadTextFile(schema_path)));
  ParseStats stats;
  std::vector<json> rows;
  for (const auto& f : files) {
    json dialogues;
    try {
      dialogues = json::parse(ReadTextFile(f));
    } catch (const json::exception& e) {
      throw ParseError(f + ": " + e.what());
    }
    for (const auto& ex : ParseDialogues(dialogues, schema, &stats)) rows.push_back(ExampleToJson(ex));
  }
  WriteJsonLines(a.out, rows);
  g.Log("preprocess: " + std::to_string(stats.dialogues) + " dialogues, " +
        std::to_string(stats.system_turns) + " system turns, " + std::to_string(stats.examples) +
        " examples, " + std::to_string(stats.skipped) + " skipped");
  for (const auto& w : stats.warnings) g.Log("warning: " + w);
  if (!a.stats.empty()) {
    json s = {{"dialogues", stats.dialogues},     {"system_turns", stats.system_turns},
              {"user_turns", stats.user_turns},   {"examples", stats.examples},
              {"skipped", stats.skipped},         {"warnings", stats.warnings}};
    WriteTextFile(a.stats, s.dump(2) + "\n");
  }
  return kExitOk;
}

// ------------------------------------------------------------------ annotate

struct AnnotateArgs {
  std::string in;
  std::string out;
  std::string nidf;
  std::vector<std::string> classifiers;
  std::string stats;
  std::string split = "train";
  LexicalThresholds thresholds;
};

void AnnotateSemanticPartial(std::string_view text,
                             const std::map<std::string, std::shared_ptr<StyleClassifier>>& clfs,
                             StyleLabels* labels) {
  for (const auto& [family, clf] : clfs) {
    const auto ids = clf->provider().Encode(text);
    if (ids.empty()) continue;
    const auto probs = clf->PredictProba(ids);
    if (family == "sentiment") {
      const auto decision = SentimentDecision(probs, clf->class_names());
      labels->Set(Style::kNegative, decision == "negative");
      labels->Set(Style::kPositive, decision == "positive");
    } else if (family == "formal") {
      labels->Set(Style::kFormal, BinaryDecision(probs, clf->class_names(), "formal"));
    } else if (family == "empathy") {
      labels->Set(Style::kEmpathy, BinaryDecision(probs, clf->class_names(), "empathy"));
    }
  }
}

int RunAnnotate(const AnnotateArgs& a, const Globals& g) {
  const auto rows = ReadJsonLines(a.in);
  std::vector<CorpusExample> examples;
  for (const auto& r : rows) examples.push_back(ExampleFromJson(r));
  std::optional<NidfTable> table;
  if (!a.nidf.empty()) table = NidfTable::FromJson(json::parse(ReadTextFile(a.nidf)));
  auto labels = AnnotateCorpusLexical(examples, a.thresholds, table ? &*table : nullptr);
  const auto classifiers = LoadClassifiers(a.classifiers);
  std::vector<json> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    AnnotateSemanticPartial(examples[i].tmpl.text(), classifiers, &labels[i]);
    json r = rows[i];
    r["styles"] = labels[i].ToJson();
    out.push_back(std::move(r));
  }
  WriteJsonLines(a.out, out);
  const auto dist = CorpusStats({{a.split, labels}});
  if (!a.stats.empty()) WriteTextFile(a.stats, FormatCorpusStats(dist));
  g.Log("annotate: " + std::to_string(out.size()) + " examples");
  return kExitOk;
}

// ---------------------------------------------------------------- build-nidf

int RunBuildNidf(const std::string& in, const std::string& out, const Globals& g) {
  std::vector<std::vector<std::string>> templates;
  for (const auto& ex : ReadCorpus(in)) templates.push_back(ex.tmpl.Tokens());
  const auto table = NidfTable::Build(templates);
  WriteTextFile(out, table.ToJson().dump(1) + "\n");
  g.Log("build-nidf: " + std::to_string(table.idf().size()) + " words from " +
        std::to_string(table.n_templates()) + " templates");
  return kExitOk;
}

// ------------------------------------------------------------------ train-lm

struct TrainLmArgs {
  std::string in;
  std::string out;
  std::string method = "baseline";
  std::vector<std::string> ct_styles;
  LmSpec spec;
};

int RunTrainLm(TrainLmArgs a, const Globals& g) {
  if (a.method != "baseline" && a.method != "ct")
    throw UsageError({"train-lm method must be baseline or ct"});
  if (a.spec.kind != "nplm" && a.spec.kind != "ngram")
    throw UsageError({"language model kind must be nplm or ngram"});
  if (a.method == "baseline" && !a.ct_styles.empty())
    throw UsageError({"--ct-style applies to ct training only"});
  const auto rows = ReadJsonLines(a.in);
  std::vector<CorpusExample> examples;
  std::vector<StyleLabels> labels;
  std::vector<Style> ct;
  if (a.method == "ct") {
    if (a.ct_styles.empty()) {
      for (Style s : kAllStyles)
        if (IsLexical(s)) ct.push_back(s);
    } else {
      for (const auto& name : a.ct_styles) ct.push_back(ParseStyleArg(name).style);
    }
  }
  for (const auto& r : rows) {
    examples.push_back(ExampleFromJson(r));
    if (a.method == "ct") {
      if (!r.contains("styles"))
        throw Error("ct training needs annotated input; run annotate first");
      labels.push_back(StyleLabels::FromJson(r.at("styles")));
    }
  }
  a.spec.train.seed = g.seed;
  const auto strings = TrainingStrings(examples, labels, ct);
  const auto trained = TrainLanguageModel(strings, a.spec, [&g](int epoch, double loss) {
    g.Log("epoch " + std::to_string(epoch) + " loss " + Format("%.4f", loss));
  });
  std::map<std::string, std::string> meta = {{"method", a.method},
                                             {"seed", std::to_string(g.seed)},
                                             {"examples", std::to_string(examples.size())}};
  std::string ct_names;
  for (Style s : ct) ct_names += (ct_names.empty() ? "" : ",") + std::string(StyleName(s));
  if (!ct_names.empty()) meta["ct_styles"] = ct_names;
  if (a.spec.kind == "nplm") {
    meta["epochs"] = std::to_string(a.spec.train.epochs);
    meta["learning_rate"] = Format("%.17g", a.spec.train.learning_rate);
    meta["batch_size"] = std::to_string(a.spec.train.batch_size);
    if (!trained.report.epoch_losses.empty())
      meta["final_loss"] = Format("%.17g", trained.report.epoch_losses.back());
  }
  SaveLanguageModel(a.out, *trained.vocab, *trained.model, meta);
  g.Log("train-lm: " + a.spec.kind + " " + a.method + ", vocabulary " +
        std::to_string(trained.vocab->size()));
  return kExitOk;
}

// ---------------------------------------------------------- train-classifier

struct TrainClassifierArgs {
  std::string in;
  std::string lm;
  std::string family;
  std::string mode = "bag-of-embeddings";
  std::string out;
  ClassifierTrainConfig config;
};

int RunTrainClassifier(TrainClassifierArgs a, const Globals& g) {
  const auto lm = LoadLanguageModel(a.lm);
  if (!lm.nplm) throw UsageError({"classifiers read representations from an nplm language model"});
  auto data = ReadLabeledText(a.in);
  for (auto& row : data) row.label = NormalizeLabel(a.family, row.label);
  const auto provider =
      std::make_shared<RepresentationProvider>(ModeFromName(a.mode), lm.nplm, lm.vocab);
  a.config.seed = g.seed;
  ClassifierTrainReport report;
  const auto clf = TrainClassifier(a.family, data, provider, a.config, &report);
  SaveClassifier(a.out, clf);
  const double loss = report.epoch_losses.empty() ? report.initial_loss : report.epoch_losses.back();
  g.Log("train-classifier: " + a.family + " (" + std::string(ModeName(provider->mode())) +
        "), loss " + Format("%.4f", report.initial_loss) + " -> " + Format("%.4f", loss) +
        ", train accuracy " + Format("%.4f", ClassifierAccuracy(clf, data)));
  return kExitOk;
}

// ------------------------------------------------------------------ generate

struct GenerateArgs {
  std::string lm;
  std::string in;
  std::string out;
  std::vector<std::string> styles;
  std::vector<std::string> classifiers;
  bool entire_sequence = false;
  std::size_t limit = 0;
  RunConfig run;
};

int RunGenerate(GenerateArgs a, const Globals& g) {
  RunConfig& run = a.run;
  run.seed = g.seed;
  run.pplm.seed = g.seed;
  run.pplm.max_len = run.max_len;
  for (const auto& s : a.styles) run.styles.push_back(ParseStyleArg(s));
  // Check the flags before touching any file. Whether lexical styles may join
  // a discriminator method depends on how the model was trained, so that one
  // constraint waits for the model; any other violation is reported now,
  // together with it.
  {
    RunConfig conditional = run;
    conditional.lm_conditional = true;
    if (!ValidateConfig(conditional).empty()) throw UsageError(ValidateConfig(run));
  }
  const auto lm = LoadLanguageModel(a.lm);
  run.lm_kind = lm.kind;
  const auto method_it = lm.params.find("method");
  run.lm_conditional = method_it != lm.params.end() && method_it->second == "ct";
  if (auto diags = ValidateConfig(run); !diags.empty()) throw UsageError(std::move(diags));

  // Control prefixes: every style under ct, lexical styles otherwise.
  std::vector<Style> control_styles;
  for (const auto& r : run.styles)
    if (run.method == "ct" || IsLexical(r.style)) control_styles.push_back(r.style);
  const auto controls = ControlsFor(control_styles);
  for (const auto& c : controls) {
    if (!lm.vocab->Contains(c))
      throw UsageError({"language model has no control token " + c +
                        "; train it with ct for that style"});
  }

  const auto classifiers = LoadClassifiers(a.classifiers);
  DecodeConfig decode;
  decode.method = run.method == "bswd" ? DecodeConfig::kBswd : DecodeConfig::kWd;
  decode.beam = run.beam;
  decode.top_k = run.top_k;
  decode.max_len = run.max_len;
  decode.entire_sequence = a.entire_sequence;
  std::vector<PplmDiscriminator> discriminators;
  const bool discriminative = run.method == "wd" || run.method == "bswd" || run.method == "pplm";
  if (discriminative) {
    for (const auto& r : run.styles) {
      if (IsLexical(r.style)) continue;
      const auto& clf = ClassifierFor(r.style, classifiers);
      if (clf.provider().vocab().tokens() != lm.vocab->tokens())
        throw Error("classifier for " + clf.style() +
                    " was built over a different vocabulary than the language model");
      const std::size_t target = TargetIndex(clf, r.style);
      decode.styles.push_back({&clf, target, r.lambda});
      discriminators.push_back({&clf, target, r.lambda});
    }
  }

  json style_names = json::array();
  for (const auto& r : run.styles) style_names.push_back(FormatStyleRequest(r));
  const auto examples = ReadCorpus(a.in);
  const std::size_t n = a.limit == 0 ? examples.size() : std::min(a.limit, examples.size());
  std::vector<json> records;
  records.reserve(n);
  std::size_t degenerated = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ex = examples[i];
    const auto prompt = EncodePrompt(*lm.vocab, ex.mr, controls);
    GenerationResult gen;
    json extra = json::object();
    if (run.method == "baseline" || run.method == "ct") {
      const auto mode = run.beam > 1 ? DecodeMode::Beam(run.beam) : DecodeMode::Greedy();
      gen = Generate(*lm.model, prompt, mode, run.max_len);
    } else if (run.method == "pplm") {
      const auto r = PplmGenerate(*lm.nplm, discriminators, run.pplm, prompt);
      gen = r.generation;
      degenerated += r.degenerated ? 1 : 0;
      extra = {{"alpha", run.pplm.alpha},
               {"lambda", run.pplm.lambda},
               {"gamma_gm", run.pplm.gamma_gm},
               {"degenerated", r.degenerated}};
    } else {
      gen = WeightedDecode(*lm.model, decode, prompt);
    }
    json rec = {{"id", ex.id},
                {"mr", MrToJson(ex.mr)},
                {"method", run.method},
                {"styles", style_names},
                {"output", DecodeTemplate(*lm.vocab, gen.tokens)},
                {"lm_logprob", gen.lm_logprob},
                {"combined_logprob", gen.score},
                {"values", ex.values}};
    rec.update(extra);
    records.push_back(std::move(rec));
    if ((i + 1) % 100 == 0) g.Log("generate: " + std::to_string(i + 1) + "/" + std::to_string(n));
  }
  WriteJsonLines(a.out, records);
  std::string summary = "generate: " + std::to_string(n) + " outputs with " + run.method;
  if (run.method == "pplm") summary += ", " + std::to_string(degenerated) + " degenerated";
  g.Log(summary);
  return kExitOk;
}

// ------------------------------------------------------------------ evaluate

struct EvaluateArgs {
  std::string gen;
  std::string refs;
  std::string style;
  std::vector<std::string> classifiers;
  std::string nidf;
  std::string out;
  std::string label;
  LexicalThresholds thresholds;
};

int RunEvaluate(const EvaluateArgs& a, std::ostream& out, const Globals& g) {
  const auto gen = ReadJsonLines(a.gen);
  if (gen.empty()) throw Error(a.gen + " holds no generations");
  const auto refs = ReadCorpus(a.refs);
  std::map<std::string, const CorpusExample*> by_id;
  std::map<std::string, std::vector<TokenSeq>> by_mr;
  for (const auto& ex : refs) {
    by_id.emplace(ex.id, &ex);
    by_mr[Flatten(ex.mr)].push_back(ex.tmpl.Tokens());
  }

  std::optional<Style> style;
  if (!a.style.empty()) style = ParseStyleArg(a.style).style;
  std::optional<NidfTable> table;
  if (style && IsLexical(*style)) {
    if (!a.nidf.empty()) {
      table = NidfTable::FromJson(json::parse(ReadTextFile(a.nidf)));
    } else {
      std::vector<std::vector<std::string>> templates;
      for (const auto& ex : refs) templates.push_back(ex.tmpl.Tokens());
      table = NidfTable::Build(templates);
    }
  }
  const auto classifiers = LoadClassifiers(a.classifiers);
  const StyleClassifier* clf = nullptr;
  if (style && !IsLexical(*style)) clf = &ClassifierFor(*style, classifiers);

  std::vector<TokenSeq> candidates;
  std::vector<std::vector<TokenSeq>> references;
  std::vector<SerBreakdown> ser;
  std::vector<bool> conforms;
  std::string method;
  for (const auto& rec : gen) {
    const std::string id = rec.at("id").get<std::string>();
    auto it = by_id.find(id);
    if (it == by_id.end()) throw Error("generation " + id + " has no reference in " + a.refs);
    const std::string output = rec.at("output").get<std::string>();
    const auto tokens = Tokenize(output);
    candidates.push_back(tokens);
    references.push_back(by_mr.at(Flatten(it->second->mr)));
    ser.push_back(Ser(it->second->mr, output));
    if (method.empty()) method = rec.value("method", std::string());
    if (style) {
      conforms.push_back(IsLexical(*style)
                             ? LexicalConforms(*style, tokens, a.thresholds, *table)
                             : SemanticConforms(*clf, TargetClass(*style), output));
    }
  }

  EvalRow row;
  row.style = style ? std::string(StyleDisplayName(*style)) : "-";
  row.method = a.label.empty() ? method : a.label;
  row.style_accuracy = style ? StyleAccuracy(conforms) : 0.0;
  row.checker = style ? (IsLexical(*style) ? "rule" : "classifier") : "";
  row.bleu = Bleu(candidates, references);
  const auto summary = SummarizeSer(ser);
  row.ser = summary.micro;

  const json result = {{"style", row.style},
                       {"method", row.method},
                       {"style_accuracy", row.style_accuracy},
                       {"checker", row.checker},
                       {"bleu", row.bleu},
                       {"ser", row.ser},
                       {"ser_macro", summary.macro},
                       {"deletions", summary.deletions},
                       {"repetitions", summary.repetitions},
                       {"hallucinations", summary.hallucinations},
                       {"total_slots", summary.total_slots},
                       {"outputs", gen.size()}};
  if (!a.out.empty()) WriteTextFile(a.out, result.dump(2) + "\n");
  out << EmitReport({row});
  g.Log("evaluate: " + std::to_string(gen.size()) + " outputs");
  return kExitOk;
}

// -------------------------------------------------------------------- report

int RunReport(const std::vector<std::string>& inputs, const std::string& out_path,
              std::ostream& out) {
  std::vector<EvalRow> rows;
  for (const auto& path : inputs) {
    const auto j = json::parse(ReadTextFile(path));
    EvalRow r;
    r.style = j.at("style").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.style_accuracy = j.at("style_accuracy").get<double>();
    r.bleu = j.at("bleu").get<double>();
    r.ser = j.at("ser").get<double>();
    r.checker = j.value("checker", std::string());
    rows.push_back(std::move(r));
  }
  const auto text = EmitReport(rows);
  if (out_path.empty()) {
    out << text;
  } else {
    WriteTextFile(out_path, text);
  }
  return kExitOk;
}

// ----------------------------------------------------------------- worksheet

int RunWorksheet(const std::string& gen_path, const std::string& out_path, std::size_t limit,
                 std::ostream& out) {
  std::vector<WorksheetRow> rows;
  for (const auto& rec : ReadJsonLines(gen_path)) {
    if (limit != 0 && rows.size() >= limit) break;
    const auto mr = MrFromJson(rec.at("mr"));
    SlotValueMap values;
    if (rec.contains("values")) values = rec.at("values").get<SlotValueMap>();
    rows.push_back(MakeWorksheetRow(mr, values, rec.at("output").get<std::string>()));
  }
  if (out_path.empty()) {
    EmitWorksheet(rows, out);
  } else {
    std::ostringstream buf;
    EmitWorksheet(rows, buf);
    WriteTextFile(out_path, buf.str());
  }
  return kExitOk;
}

void AddThresholdFlags(CLI::App* cmd, LexicalThresholds* t) {
  cmd->add_option("--short-max", t->short_max_tokens, "Longest template counted as short")
      ->capture_default_str();
  cmd->add_option("--long-min", t->long_min_tokens, "Shortest template counted as long")
      ->capture_default_str();
  cmd->add_option("--rare-min", t->rare_nidf_min, "Max NIDF that marks a rare word")
      ->capture_default_str();
  cmd->add_option("--descriptive-min", t->descriptive_min_adjectives,
                  "Adjective count that must be exceeded for descriptive")
      ->capture_default_str();
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stylistic control for schema-guided natural language generation", "stylenlg"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file overriding defaults (e.g. generate.beam=2)");
  Globals g;
  g.err = &err;
  app.add_option("--seed", g.seed, "Seed for training and sampling")->capture_default_str();
  app.add_flag("--quiet", g.quiet, "Suppress progress messages");

  PreprocessArgs pre;
  auto* cmd_pre = app.add_subcommand("preprocess", "Dialogue JSON to a corpus of templates");
  cmd_pre->add_option("--in", pre.in, "Split directory or dialogue file")->required();
  cmd_pre->add_option("--schema", pre.schema, "Schema file (default <in>/schema.json)");
  cmd_pre->add_option("--out", pre.out, "Corpus JSONL")->required();
  cmd_pre->add_option("--stats", pre.stats, "Write parse statistics as JSON");

  AnnotateArgs ann;
  auto* cmd_ann = app.add_subcommand("annotate", "Attach style labels to a corpus");
  cmd_ann->add_option("--in", ann.in, "Corpus JSONL")->required();
  cmd_ann->add_option("--out", ann.out, "Annotated corpus JSONL")->required();
  cmd_ann->add_option("--nidf", ann.nidf, "NIDF table (default: built from --in)");
  cmd_ann->add_option("--classifier", ann.classifiers, "Semantic style classifier (repeatable)");
  cmd_ann->add_option("--stats", ann.stats, "Write the style distribution as markdown");
  cmd_ann->add_option("--split", ann.split, "Split name for --stats")->capture_default_str();
  AddThresholdFlags(cmd_ann, &ann.thresholds);

  std::string nidf_in, nidf_out;
  auto* cmd_nidf = app.add_subcommand("build-nidf", "NIDF table from corpus templates");
  cmd_nidf->add_option("--in", nidf_in, "Corpus JSONL")->required();
  cmd_nidf->add_option("--out", nidf_out, "NIDF JSON")->required();

  TrainLmArgs tlm;
  auto* cmd_tlm = app.add_subcommand("train-lm", "Train a baseline or conditional LM");
  cmd_tlm->add_option("--in", tlm.in, "Corpus JSONL (annotated for ct)")->required();
  cmd_tlm->add_option("--out", tlm.out, "Model file")->required();
  cmd_tlm->add_option("--method", tlm.method, "baseline or ct")->capture_default_str();
  cmd_tlm->add_option("--ct-style", tlm.ct_styles,
                      "Style with a control token (repeatable, default all lexical)");
  cmd_tlm->add_option("--kind", tlm.spec.kind, "nplm or ngram")->capture_default_str();
  cmd_tlm->add_option("--context", tlm.spec.shape.context, "NPLM context size")
      ->capture_default_str();
  cmd_tlm->add_option("--embed", tlm.spec.shape.embed, "NPLM embedding size")
      ->capture_default_str();
  cmd_tlm->add_option("--hidden", tlm.spec.shape.hidden, "NPLM hidden size")
      ->capture_default_str();
  cmd_tlm->add_option("--epochs", tlm.spec.train.epochs, "NPLM epochs")->capture_default_str();
  cmd_tlm->add_option("--lr", tlm.spec.train.learning_rate, "NPLM learning rate")
      ->capture_default_str();
  cmd_tlm->add_option("--batch", tlm.spec.train.batch_size, "NPLM minibatch size")
      ->capture_default_str();
  cmd_tlm->add_option("--order", tlm.spec.ngram_order, "N-gram order")->capture_default_str();
  cmd_tlm->add_option("--k", tlm.spec.ngram_k, "N-gram add-k")->capture_default_str();
  cmd_tlm->add_option("--min-count", tlm.spec.min_count, "Vocabulary count cutoff")
      ->capture_default_str();

  TrainClassifierArgs tc;
  auto* cmd_tc = app.add_subcommand("train-classifier", "Train a semantic style classifier");
  cmd_tc->add_option("--in", tc.in, "Labeled JSONL with text and label")->required();
  cmd_tc->add_option("--lm", tc.lm, "NPLM supplying representations")->required();
  cmd_tc->add_option("--family", tc.family, "formal, sentiment or empathy")->required();
  cmd_tc->add_option("--mode", tc.mode, "bag-of-embeddings or nplm-hidden")
      ->capture_default_str();
  cmd_tc->add_option("--out", tc.out, "Classifier file")->required();
  cmd_tc->add_option("--epochs", tc.config.epochs)->capture_default_str();
  cmd_tc->add_option("--lr", tc.config.learning_rate)->capture_default_str();
  cmd_tc->add_option("--l2", tc.config.l2)->capture_default_str();

  GenerateArgs gen;
  auto* cmd_gen = app.add_subcommand("generate", "Generate templates for corpus MRs");
  cmd_gen->add_option("--lm", gen.lm, "Language model file")->required();
  cmd_gen->add_option("--in", gen.in, "Corpus JSONL whose MRs are used")->required();
  cmd_gen->add_option("--out", gen.out, "Generation JSONL")->required();
  cmd_gen->add_option("--method", gen.run.method, "baseline, ct, wd, bswd or pplm")
      ->capture_default_str();
  cmd_gen->add_option("--style", gen.styles, "Style, optionally name:lambda (repeatable)");
  cmd_gen->add_option("--classifier", gen.classifiers, "Style classifier (repeatable)");
  cmd_gen->add_option("--beam", gen.run.beam, "Beam width")->capture_default_str();
  cmd_gen->add_option("--top-k", gen.run.top_k, "Weighted decoding candidate set size")
      ->capture_default_str();
  cmd_gen->add_option("--max-len", gen.run.max_len, "Maximum generated tokens")
      ->capture_default_str();
  cmd_gen->add_flag("--entire-sequence", gen.entire_sequence,
                    "Score candidates on the whole generated sequence");
  cmd_gen->add_option("--alpha", gen.run.pplm.alpha, "PPLM step size")->capture_default_str();
  cmd_gen->add_option("--kl-lambda", gen.run.pplm.lambda, "PPLM KL weight")
      ->capture_default_str();
  cmd_gen->add_option("--gamma", gen.run.pplm.gamma_gm, "PPLM fusion exponent")
      ->capture_default_str();
  cmd_gen->add_option("--iterations", gen.run.pplm.iterations, "PPLM updates per step")
      ->capture_default_str();
  cmd_gen->add_option("--max-repeat", gen.run.pplm.max_repeat,
                      "PPLM repeated-token run that flags degeneration")
      ->capture_default_str();
  cmd_gen->add_flag("--sample", gen.run.pplm.sample, "Sample PPLM tokens instead of argmax");
  cmd_gen->add_option("--limit", gen.limit, "Generate for the first N MRs only (0 = all)")
      ->capture_default_str();

  EvaluateArgs ev;
  auto* cmd_ev = app.add_subcommand("evaluate", "Style accuracy, BLEU and SER");
  cmd_ev->add_option("--gen", ev.gen, "Generation JSONL")->required();
  cmd_ev->add_option("--refs", ev.refs, "Reference corpus JSONL")->required();
  cmd_ev->add_option("--style", ev.style, "Style to check");
  cmd_ev->add_option("--classifier", ev.classifiers, "Style classifier (repeatable)");
  cmd_ev->add_option("--nidf", ev.nidf, "NIDF table (default: built from --refs)");
  cmd_ev->add_option("--out", ev.out, "Write the result row as JSON");
  cmd_ev->add_option("--label", ev.label, "Model name in the report");
  AddThresholdFlags(cmd_ev, &ev.thresholds);

  std::vector<std::string> report_in;
  std::string report_out;
  auto* cmd_rep = app.add_subcommand("report", "Markdown table from evaluate results");
  cmd_rep->add_option("inputs", report_in, "Result JSON files")->required();
  cmd_rep->add_option("--out", report_out, "Markdown file (default stdout)");

  std::string ws_gen, ws_out;
  std::size_t ws_limit = 0;
  auto* cmd_ws = app.add_subcommand("worksheet", "Lexicalized outputs for human rating");
  cmd_ws->add_option("--gen", ws_gen, "Generation JSONL")->required();
  cmd_ws->add_option("--out", ws_out, "TSV file (default stdout)");
  cmd_ws->add_option("--limit", ws_limit, "First N rows only (0 = all)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; every other parse failure is a usage
    // error whatever CLI11's own code.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_pre->parsed()) return RunPreprocess(pre, g);
    if (cmd_ann->parsed()) return RunAnnotate(ann, g);
    if (cmd_nidf->parsed()) return RunBuildNidf(nidf_in, nidf_out, g);
    if (cmd_tlm->parsed()) return RunTrainLm(tlm, g);
    if (cmd_tc->parsed()) return RunTrainClassifier(tc, g);
    if (cmd_gen->parsed()) return RunGenerate(gen, g);
    if (cmd_ev->parsed()) return RunEvaluate(ev, out, g);
    if (cmd_rep->parsed()) return RunReport(report_in, report_out, out);
    if (cmd_ws->parsed()) return RunWorksheet(ws_gen, ws_out, ws_limit, out);
  } catch (const UsageError& e) {
    for (const auto& d : e.diagnostics()) err << "usage error: " << d << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace stylenlg::cli
