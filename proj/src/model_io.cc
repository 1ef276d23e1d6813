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

#include "stylenlg/model_io.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stylenlg/error.h"

namespace stylenlg {

namespace {

constexpr const char* kMagic = "stylenlg-model v1";

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Writer {
 public:
  explicit Writer(std::string_view kind) {
    out_ += kMagic;
    out_ += "\nkind ";
    out_ += kind;
    out_ += '\n';
  }

  void Param(const std::string& key, const std::string& value) {
    if (key.find_first_of(" \t\n") != std::string::npos ||
        value.find('\n') != std::string::npos)
      throw Error("model parameter keys must be single words: " + key);
    out_ += "param " + key + " " + value + "\n";
  }

  void Vocab(const Vocabulary& vocab) {
    out_ += "vocab " + std::to_string(vocab.size()) + "\n";
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      const auto id = static_cast<TokenId>(i);
      out_ += vocab.IsControl(id) ? "1 " : "0 ";
      out_ += vocab.Token(id) + "\n";
    }
  }

  void Block(const std::string& name, std::size_t rows, std::size_t cols,
             const std::vector<double>& values) {
    if (values.size() != rows * cols) throw Error("block " + name + " has the wrong size");
    out_ += "block " + name + " " + std::to_string(rows) + " " + std::to_string(cols) + "\n";
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (c > 0) out_ += ' ';
        out_ += FormatDouble(values[r * cols + c]);
      }
      out_ += '\n';
    }
  }

  void Counts(const NGramModel::Table& table) {
    std::size_t n = 0;
    for (const auto& [ctx, cc] : table) n += cc.next.size();
    out_ += "counts " + std::to_string(n) + "\n";
    for (const auto& [ctx, cc] : table) {
      for (const auto& [w, c] : cc.next) {
        out_ += std::to_string(ctx.size());
        for (TokenId id : ctx) out_ += " " + std::to_string(id);
        out_ += " " + std::to_string(w) + " " + FormatDouble(c) + "\n";
      }
    }
  }

  std::string Finish() { return out_ + "end\n"; }

 private:
  std::string out_;
};

struct Parsed {
  std::string kind;
  std::map<std::string, std::string> params;
  std::vector<std::string> tokens;
  std::vector<bool> controls;
  bool has_vocab = false;
  struct BlockData {
    std::size_t rows = 0, cols = 0;
    std::vector<double> values;
  };
  std::map<std::string, BlockData> blocks;
  NGramModel::Table counts;

  const BlockData& GetBlock(const std::string& name) const {
    auto it = blocks.find(name);
    if (it == blocks.end()) throw ModelFormatError("missing block " + name);
    return it->second;
  }
  const std::string& GetParam(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw ModelFormatError("missing param " + key);
    return it->second;
  }
  std::size_t SizeParam(const std::string& key) const {
    const auto& v = GetParam(key);
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0') throw ModelFormatError("bad integer param " + key);
    return static_cast<std::size_t>(x);
  }
  double DoubleParam(const std::string& key) const {
    const auto& v = GetParam(key);
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') throw ModelFormatError("bad numeric param " + key);
    return x;
  }
  Vocabulary MakeVocab() const {
    if (!has_vocab) throw ModelFormatError("model file has no vocabulary");
    return Vocabulary::FromTokens(tokens, controls);
  }
};

double ParseDouble(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw ModelFormatError("line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

long long ParseInt(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0' || v < 0)
    throw ModelFormatError("line " + std::to_string(line) + ": bad integer '" + s + "'");
  return v;
}

Parsed Parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> std::string& {
    if (!std::getline(in, line)) throw ModelFormatError("unexpected end of model file");
    ++lineno;
    return line;
  };
  if (next_line() != kMagic) throw ModelFormatError("not a stylenlg model file (bad header)");
  Parsed p;
  bool ended = false;
  while (!ended && std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "kind") {
      ls >> p.kind;
    } else if (tag == "param") {
      std::string key, value;
      ls >> key;
      std::getline(ls, value);
      if (!value.empty() && value.front() == ' ') value.erase(0, 1);
      p.params[key] = value;
    } else if (tag == "vocab") {
      std::string n_str;
      ls >> n_str;
      const auto n = static_cast<std::size_t>(ParseInt(n_str, lineno));
      for (std::size_t i = 0; i < n; ++i) {
        const auto& l = next_line();
        if (l.size() < 3 || (l[0] != '0' && l[0] != '1') || l[1] != ' ')
          throw ModelFormatError("line " + std::to_string(lineno) + ": bad vocabulary entry");
        p.controls.push_back(l[0] == '1');
        p.tokens.push_back(l.substr(2));
      }
      p.has_vocab = true;
    } else if (tag == "block") {
      std::string name, r_str, c_str;
      ls >> name >> r_str >> c_str;
      Parsed::BlockData b;
      b.rows = static_cast<std::size_t>(ParseInt(r_str, lineno));
      b.cols = static_cast<std::size_t>(ParseInt(c_str, lineno));
      b.values.reserve(b.rows * b.cols);
      for (std::size_t r = 0; r < b.rows; ++r) {
        std::istringstream rs(next_line());
        std::string v;
        std::size_t cols = 0;
        while (rs >> v) {
          b.values.push_back(ParseDouble(v, lineno));
          ++cols;
        }
        if (cols != b.cols)
          throw ModelFormatError("line " + std::to_string(lineno) + ": block " + name +
                                 " row has " + std::to_string(cols) + " values, expected " +
                                 std::to_string(b.cols));
      }
      p.blocks[name] = std::move(b);
    } else if (tag == "counts") {
      std::string n_str;
      ls >> n_str;
      const auto n = static_cast<std::size_t>(ParseInt(n_str, lineno));
      for (std::size_t i = 0; i < n; ++i) {
        std::istringstream cs(next_line());
        std::string tok;
        std::vector<std::string> f;
        while (cs >> tok) f.push_back(tok);
        if (f.empty()) throw ModelFormatError("line " + std::to_string(lineno) + ": empty count");
        const auto len = static_cast<std::size_t>(ParseInt(f[0], lineno));
        if (f.size() != len + 3)
          throw ModelFormatError("line " + std::to_string(lineno) + ": malformed count line");
        std::vector<TokenId> ctx;
        for (std::size_t j = 0; j < len; ++j)
          ctx.push_back(static_cast<TokenId>(ParseInt(f[1 + j], lineno)));
        const auto w = static_cast<TokenId>(ParseInt(f[len + 1], lineno));
        const double c = ParseDouble(f[len + 2], lineno);
        auto& cc = p.counts[ctx];
        cc.next[w] += c;
        cc.total += c;
      }
    } else if (tag == "end") {
      ended = true;
    } else if (!tag.empty()) {
      throw ModelFormatError("line " + std::to_string(lineno) + ": unknown section '" + tag + "'");
    }
  }
  if (!ended) throw ModelFormatError("model file is truncated (no end marker)");
  return p;
}

void WriteNplmBlocks(Writer& w, const NplmParams& p) {
  const auto& s = p.shape;
  w.Param("context", std::to_string(s.context));
  w.Param("embed", std::to_string(s.embed));
  w.Param("hidden", std::to_string(s.hidden));
  w.Block("embedding", s.vocab, s.embed, p.embedding);
  w.Block("w1", s.hidden, s.input(), p.w1);
  w.Block("b1", 1, s.hidden, p.b1);
  w.Block("w2", s.vocab, s.hidden, p.w2);
  w.Block("b2", 1, s.vocab, p.b2);
}

NplmParams ReadNplmBlocks(const Parsed& p, std::size_t vocab) {
  NplmShape shape;
  shape.vocab = vocab;
  shape.context = p.SizeParam("context");
  shape.embed = p.SizeParam("embed");
  shape.hidden = p.SizeParam("hidden");
  NplmParams params;
  params.shape = shape;
  params.embedding = p.GetBlock("embedding").values;
  params.w1 = p.GetBlock("w1").values;
  params.b1 = p.GetBlock("b1").values;
  params.w2 = p.GetBlock("w2").values;
  params.b2 = p.GetBlock("b2").values;
  try {
    params.Validate();
  } catch (const Error& e) {
    throw ModelFormatError(e.what());
  }
  return params;
}

}  // namespace

std::string SerializeLanguageModel(const Vocabulary& vocab, const LanguageModel& model,
                                   const std::map<std::string, std::string>& params) {
  if (model.vocab_size() != vocab.size())
    throw Error("model and vocabulary sizes differ");
  if (const auto* nplm = dynamic_cast<const Nplm*>(&model)) {
    Writer w("nplm");
    for (const auto& [k, v] : params) w.Param("meta." + k, v);
    w.Vocab(vocab);
    WriteNplmBlocks(w, nplm->params());
    return w.Finish();
  }
  if (const auto* ngram = dynamic_cast<const NGramModel*>(&model)) {
    Writer w("ngram");
    for (const auto& [k, v] : params) w.Param("meta." + k, v);
    w.Param("order", std::to_string(ngram->order()));
    w.Param("k", FormatDouble(ngram->k()));
    w.Vocab(vocab);
    w.Counts(ngram->counts());
    return w.Finish();
  }
  throw Error("unsupported language model type");
}

LoadedLm ParseLanguageModel(const std::string& text) {
  const Parsed p = Parse(text);
  LoadedLm out;
  out.kind = p.kind;
  auto vocab = std::make_shared<Vocabulary>(p.MakeVocab());
  out.vocab = vocab;
  for (const auto& [k, v] : p.params) {
    if (k.rfind("meta.", 0) == 0) out.params[k.substr(5)] = v;
  }
  if (p.kind == "nplm") {
    auto nplm = std::make_shared<Nplm>(ReadNplmBlocks(p, vocab->size()));
    out.nplm = nplm;
    out.model = nplm;
  } else if (p.kind == "ngram") {
    const auto order = static_cast<int>(p.SizeParam("order"));
    for (const auto& [ctx, cc] : p.counts) {
      if (ctx.size() >= static_cast<std::size_t>(std::max(order, 1)))
        throw ModelFormatError("n-gram context longer than the model order");
      for (const auto& [w, c] : cc.next) {
        if (static_cast<std::size_t>(w) >= vocab->size())
          throw ModelFormatError("n-gram count refers to an unknown token id");
      }
    }
    out.model = std::make_shared<NGramModel>(
        NGramModel::FromCounts(vocab->size(), order, p.DoubleParam("k"), p.counts));
  } else {
    throw ModelFormatError("not a language model file (kind '" + p.kind + "')");
  }
  return out;
}

void SaveLanguageModel(const std::string& path, const Vocabulary& vocab,
                       const LanguageModel& model,
                       const std::map<std::string, std::string>& params) {
  WriteTextFile(path, SerializeLanguageModel(vocab, model, params));
}

LoadedLm LoadLanguageModel(const std::string& path) {
  try {
    return ParseLanguageModel(ReadTextFile(path));
  } catch (const ModelFormatError& e) {
    throw ModelFormatError(path + ": " + e.what());
  }
}

std::string SerializeClassifier(const StyleClassifier& classifier) {
  const auto& cp = classifier.params();
  const auto& provider = classifier.provider();
  Writer w("classifier");
  w.Param("style", cp.style);
  w.Param("mode", std::string(ModeName(provider.mode())));
  std::string names;
  for (const auto& n : cp.class_names) {
    if (n.find_first_of(" \t\n") != std::string::npos)
      throw Error("class names must be single words: " + n);
    names += (names.empty() ? "" : " ") + n;
  }
  w.Param("classes", names);
  w.Vocab(provider.vocab());
  WriteNplmBlocks(w, provider.nplm().params());
  w.Block("clf_weight", cp.n_classes(), cp.rep_dim, cp.weight);
  w.Block("clf_bias", 1, cp.n_classes(), cp.bias);
  return w.Finish();
}

StyleClassifier ParseClassifier(const std::string& text) {
  const Parsed p = Parse(text);
  if (p.kind != "classifier")
    throw ModelFormatError("not a classifier file (kind '" + p.kind + "')");
  auto vocab = std::make_shared<const Vocabulary>(p.MakeVocab());
  auto nplm = std::make_shared<const Nplm>(ReadNplmBlocks(p, vocab->size()));
  auto provider = std::make_shared<const RepresentationProvider>(
      ModeFromName(p.GetParam("mode")), nplm, vocab);
  StyleClassifierParams cp;
  cp.style = p.GetParam("style");
  std::istringstream names(p.GetParam("classes"));
  for (std::string n; names >> n;) cp.class_names.push_back(n);
  const auto& wb = p.GetBlock("clf_weight");
  cp.rep_dim = wb.cols;
  cp.weight = wb.values;
  cp.bias = p.GetBlock("clf_bias").values;
  if (wb.rows != cp.n_classes()) throw ModelFormatError("classifier weight rows != classes");
  try {
    return StyleClassifier(std::move(cp), std::move(provider));
  } catch (const ModelFormatError&) {
    throw;
  } catch (const Error& e) {
    throw ModelFormatError(e.what());
  }
}

void SaveClassifier(const std::string& path, const StyleClassifier& classifier) {
  WriteTextFile(path, SerializeClassifier(classifier));
}

StyleClassifier LoadClassifier(const std::string& path) {
  try {
    return ParseClassifier(ReadTextFile(path));
  } catch (const ModelFormatError& e) {
    throw ModelFormatError(path + ": " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << contents;
  out.close();
  if (!out) throw Error("failed writing " + path);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace stylenlg
