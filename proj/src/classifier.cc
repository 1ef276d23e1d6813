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

#include "stylenlg/classifier.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "json.hpp"
#include "stylenlg/error.h"
#include "stylenlg/generate.h"
#include "stylenlg/kernels.h"
#include "stylenlg/style.h"
#include "stylenlg/tokenizer.h"

namespace stylenlg {

RepresentationProvider::RepresentationProvider(Mode mode, std::shared_ptr<const Nplm> nplm,
                                               std::shared_ptr<const Vocabulary> vocab)
    : mode_(mode), nplm_(std::move(nplm)), vocab_(std::move(vocab)) {
  if (!nplm_ || !vocab_) throw Error("representation provider needs a model and vocabulary");
  if (nplm_->vocab_size() != vocab_->size())
    throw Error("vocabulary size does not match the NPLM");
}

std::size_t RepresentationProvider::dim() const {
  return mode_ == Mode::kBagOfEmbeddings ? nplm_->shape().embed : nplm_->shape().hidden;
}

std::vector<double> RepresentationProvider::AtPosition(std::span<const TokenId> ids,
                                                       std::size_t t) const {
  const TokenId id = ids[t];
  if (id < 0 || static_cast<std::size_t>(id) >= vocab_->size())
    throw Error("token id out of range: " + std::to_string(id));
  if (mode_ == Mode::kBagOfEmbeddings) {
    const auto row = nplm_->params().EmbeddingRow(id);
    return {row.begin(), row.end()};
  }
  const auto ctx = ContextWindow(ids.first(t + 1), nplm_->shape().context);
  return nplm_->Hidden(ctx);
}

std::vector<std::vector<double>> RepresentationProvider::PerToken(
    std::span<const TokenId> ids) const {
  std::vector<std::vector<double>> out;
  out.reserve(ids.size());
  for (std::size_t t = 0; t < ids.size(); ++t) out.push_back(AtPosition(ids, t));
  return out;
}

std::vector<double> RepresentationProvider::Average(std::span<const TokenId> ids) const {
  const auto vectors = PerToken(ids);
  return AverageRepresentation(vectors);
}

std::vector<TokenId> RepresentationProvider::Encode(std::string_view text) const {
  return vocab_->Encode(Tokenize(text));
}

std::string_view ModeName(RepresentationProvider::Mode mode) {
  return mode == RepresentationProvider::Mode::kBagOfEmbeddings ? "bag-of-embeddings"
                                                                : "nplm-hidden";
}

RepresentationProvider::Mode ModeFromName(std::string_view name) {
  if (name == "bag-of-embeddings" || name == "bag") return RepresentationProvider::Mode::kBagOfEmbeddings;
  if (name == "nplm-hidden" || name == "hidden") return RepresentationProvider::Mode::kNplmHidden;
  throw Error("unknown representation mode: " + std::string(name));
}

std::vector<double> AverageRepresentation(std::span<const std::vector<double>> vectors) {
  if (vectors.empty()) throw Error("cannot average an empty sequence of representations");
  std::vector<double> mean(vectors.front().size(), 0.0);
  for (const auto& v : vectors) {
    if (v.size() != mean.size()) throw Error("representation dimensions differ");
    for (std::size_t i = 0; i < v.size(); ++i) mean[i] += v[i];
  }
  const double inv = 1.0 / static_cast<double>(vectors.size());
  for (double& m : mean) m *= inv;
  return mean;
}

void StyleClassifierParams::Validate() const {
  if (class_names.size() < 2) throw Error("a classifier needs at least two classes");
  if (weight.size() != n_classes() * rep_dim || bias.size() != n_classes())
    throw Error("classifier parameter shapes are inconsistent");
  for (double w : weight)
    if (!std::isfinite(w)) throw Error("classifier weights must be finite");
  for (double b : bias)
    if (!std::isfinite(b)) throw Error("classifier bias must be finite");
}

StyleClassifier::StyleClassifier(StyleClassifierParams params,
                                 std::shared_ptr<const RepresentationProvider> provider)
    : params_(std::move(params)), provider_(std::move(provider)) {
  params_.Validate();
  if (!provider_ || provider_->dim() != params_.rep_dim)
    throw Error("classifier dimension does not match its representation provider");
  const std::size_t v = provider_->vocab().size();
  const std::size_t nc = params_.n_classes();
  token_scores_.resize(v * nc);
  for (std::size_t w = 0; w < v; ++w) {
    const TokenId id = static_cast<TokenId>(w);
    const auto probs = ProbaFromRepresentation(provider_->AtPosition({&id, 1}, 0));
    std::copy(probs.begin(), probs.end(), token_scores_.begin() + static_cast<std::ptrdiff_t>(w * nc));
  }
}

int StyleClassifier::ClassIndex(std::string_view name) const {
  const auto& names = params_.class_names;
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

std::vector<double> StyleClassifier::Logits(std::span<const double> rep) const {
  std::vector<double> z(params_.n_classes());
  kernels::Active().gemv(params_.weight.data(), params_.n_classes(), params_.rep_dim, rep.data(),
                         params_.bias.data(), z.data());
  return z;
}

std::vector<double> StyleClassifier::ProbaFromRepresentation(std::span<const double> rep) const {
  return Softmax(Logits(rep));
}

std::vector<double> StyleClassifier::PredictProba(std::span<const TokenId> ids) const {
  if (ids.empty()) throw Error("cannot classify an empty text");
  return ProbaFromRepresentation(provider_->Average(ids));
}

std::vector<double> StyleClassifier::PredictProbaText(std::string_view text) const {
  return PredictProba(provider_->Encode(text));
}

double StyleClassifier::TokenStyleScore(TokenId w, std::size_t cls) const {
  const std::size_t nc = params_.n_classes();
  if (w < 0 || static_cast<std::size_t>(w) * nc >= token_scores_.size())
    throw Error("token id out of range: " + std::to_string(w));
  if (cls >= nc) throw Error("class index out of range");
  return token_scores_[static_cast<std::size_t>(w) * nc + cls];
}

std::vector<LabeledText> ReadLabeledText(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<LabeledText> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (NormalizeWhitespace(line).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      LabeledText row;
      row.text = j.at("text").get<std::string>();
      const auto& label = j.at("label");
      if (label.is_string()) {
        row.label = label.get<std::string>();
      } else if (label.is_boolean()) {
        row.label = label.get<bool>() ? "true" : "false";
      } else if (label.is_number_integer()) {
        row.label = std::to_string(label.get<long long>());
      } else {
        row.label = label.dump();
      }
      out.push_back(std::move(row));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string NormalizeLabel(std::string_view family, std::string_view label) {
  const std::string l = ToLower(NormalizeWhitespace(label));
  if (family == "sentiment") return MergeSentimentLabel(l);
  if (family == "formal") {
    if (l == "formal" || l == "1" || l == "true") return "formal";
    if (l == "informal" || l == "0" || l == "false") return "informal";
    throw Error("unknown formality label: " + std::string(label));
  }
  if (family == "empathy") {
    if (l == "empathy" || l == "empathetic" || l == "1" || l == "true") return "empathy";
    if (l == "non_empathy" || l == "not_empathy" || l == "0" || l == "false") return "non_empathy";
    throw Error("unknown empathy label: " + std::string(label));
  }
  return std::string(label);
}

namespace {

struct Featurized {
  std::vector<std::vector<double>> reps;
  std::vector<std::size_t> labels;
};

double FullBatchLoss(const StyleClassifierParams& p, const Featurized& data, double l2,
                     StyleClassifierParams* grad) {
  const std::size_t nc = p.n_classes();
  const auto& k = kernels::Active();
  if (grad != nullptr) {
    grad->weight.assign(p.weight.size(), 0.0);
    grad->bias.assign(p.bias.size(), 0.0);
  }
  const double inv = 1.0 / static_cast<double>(data.reps.size());
  double loss = 0.0;
  std::vector<double> z(nc), q(nc);
  for (std::size_t i = 0; i < data.reps.size(); ++i) {
    k.gemv(p.weight.data(), nc, p.rep_dim, data.reps[i].data(), p.bias.data(), z.data());
    Softmax(z, q);
    loss -= std::log(q[data.labels[i]]);
    if (grad == nullptr) continue;
    q[data.labels[i]] -= 1.0;
    for (std::size_t c = 0; c < nc; ++c) {
      k.axpy(q[c] * inv, data.reps[i].data(), grad->weight.data() + c * p.rep_dim, p.rep_dim);
      grad->bias[c] += q[c] * inv;
    }
  }
  double penalty = 0.0;
  for (double w : p.weight) penalty += w * w;
  if (grad != nullptr && l2 != 0.0) k.axpy(l2, p.weight.data(), grad->weight.data(), p.weight.size());
  return loss * inv + 0.5 * l2 * penalty;
}

}  // namespace

StyleClassifier TrainClassifier(const std::string& style, const std::vector<LabeledText>& data,
                                std::shared_ptr<const RepresentationProvider> provider,
                                const ClassifierTrainConfig& config,
                                ClassifierTrainReport* report) {
  if (!provider) throw Error("classifier training needs a representation provider");
  if (config.epochs < 0) throw Error("epochs must be >= 0");
  if (!(config.learning_rate > 0.0)) throw Error("learning rate must be > 0");
  if (!(config.l2 >= 0.0)) throw Error("l2 weight must be >= 0");
  std::set<std::string> label_set;
  for (const auto& row : data) label_set.insert(row.label);
  if (label_set.size() < 2)
    throw Error("classifier for \"" + style + "\" needs at least two classes in its data");

  StyleClassifierParams params;
  params.style = style;
  params.class_names.assign(label_set.begin(), label_set.end());
  params.rep_dim = provider->dim();
  params.weight.assign(params.n_classes() * params.rep_dim, 0.0);
  params.bias.assign(params.n_classes(), 0.0);

  Featurized feats;
  std::map<std::string, std::size_t> class_index;
  for (std::size_t c = 0; c < params.class_names.size(); ++c) class_index[params.class_names[c]] = c;
  std::vector<double> prior(params.n_classes(), 0.0);
  for (const auto& row : data) {
    const auto ids = provider->Encode(row.text);
    if (ids.empty()) continue;
    feats.reps.push_back(provider->Average(ids));
    feats.labels.push_back(class_index.at(row.label));
    prior[feats.labels.back()] += 1.0;
  }
  if (feats.reps.empty()) throw Error("no non-empty texts to train on");
  for (std::size_t c = 0; c < prior.size(); ++c) {
    // Classes whose only texts were empty still get a finite bias.
    params.bias[c] = std::log((prior[c] + 0.5) / (static_cast<double>(feats.reps.size()) +
                                                  0.5 * static_cast<double>(prior.size())));
  }

  ClassifierTrainReport local;
  ClassifierTrainReport& rep = report != nullptr ? *report : local;
  StyleClassifierParams grad = params;
  double loss = FullBatchLoss(params, feats, config.l2, &grad);
  rep.initial_loss = loss;
  double lr = config.learning_rate;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    bool accepted = false;
    for (int attempt = 0; attempt < 40 && !accepted; ++attempt) {
      StyleClassifierParams trial = params;
      kernels::Active().axpy(-lr, grad.weight.data(), trial.weight.data(), trial.weight.size());
      for (std::size_t c = 0; c < trial.bias.size(); ++c) trial.bias[c] -= lr * grad.bias[c];
      StyleClassifierParams trial_grad = trial;
      const double trial_loss = FullBatchLoss(trial, feats, config.l2, &trial_grad);
      if (std::isfinite(trial_loss) && trial_loss <= loss) {
        params = std::move(trial);
        grad = std::move(trial_grad);
        loss = trial_loss;
        accepted = true;
        lr *= 1.1;
      } else {
        lr *= 0.5;
      }
    }
    rep.epoch_losses.push_back(loss);
    if (!accepted) break;  // converged to machine precision
  }
  return StyleClassifier(std::move(params), std::move(provider));
}

double ClassifierLoss(const StyleClassifier& classifier, const std::vector<LabeledText>& data) {
  double loss = 0.0;
  std::size_t n = 0;
  for (const auto& row : data) {
    const int cls = classifier.ClassIndex(row.label);
    if (cls < 0) throw Error("label not known to classifier: " + row.label);
    const auto ids = classifier.provider().Encode(row.text);
    if (ids.empty()) continue;
    loss -= std::log(classifier.PredictProba(ids)[static_cast<std::size_t>(cls)]);
    ++n;
  }
  return n == 0 ? 0.0 : loss / static_cast<double>(n);
}

double ClassifierAccuracy(const StyleClassifier& classifier,
                          const std::vector<LabeledText>& data) {
  std::size_t correct = 0, n = 0;
  for (const auto& row : data) {
    const auto ids = classifier.provider().Encode(row.text);
    if (ids.empty()) continue;
    const auto probs = classifier.PredictProba(ids);
    correct += classifier.class_names()[ArgMax(probs)] == row.label ? 1 : 0;
    ++n;
  }
  return n == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(n);
}

}  // namespace stylenlg
