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

#include "stylenlg/nplm.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "stylenlg/error.h"
#include "stylenlg/kernels.h"

namespace stylenlg {

void Softmax(std::span<const double> logits, std::span<double> probs) {
  double max = -INFINITY;
  for (double v : logits) max = std::max(max, v);
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    probs[i] = std::exp(logits[i] - max);
    sum += probs[i];
  }
  for (double& p : probs) p /= sum;
}

std::vector<double> Softmax(std::span<const double> logits) {
  std::vector<double> probs(logits.size());
  Softmax(logits, probs);
  return probs;
}

NplmParams NplmParams::Zeros(const NplmShape& shape) {
  NplmParams p;
  p.shape = shape;
  p.embedding.assign(shape.vocab * shape.embed, 0.0);
  p.w1.assign(shape.hidden * shape.input(), 0.0);
  p.b1.assign(shape.hidden, 0.0);
  p.w2.assign(shape.vocab * shape.hidden, 0.0);
  p.b2.assign(shape.vocab, 0.0);
  return p;
}

NplmParams NplmParams::Random(const NplmShape& shape, std::uint64_t seed) {
  NplmParams p = Zeros(shape);
  std::mt19937_64 rng(seed);
  auto fill = [&rng](std::vector<double>& v, double scale) {
    for (double& x : v) x = (2.0 * UnitUniform(rng()) - 1.0) * scale;
  };
  fill(p.embedding, 0.5);
  fill(p.w1, 1.0 / std::sqrt(static_cast<double>(shape.input())));
  fill(p.w2, 1.0 / std::sqrt(static_cast<double>(shape.hidden)));
  return p;
}

std::span<const double> NplmParams::EmbeddingRow(TokenId id) const {
  return std::span<const double>(embedding).subspan(static_cast<std::size_t>(id) * shape.embed,
                                                     shape.embed);
}

bool NplmParams::AllFinite() const {
  for (const auto* block : {&embedding, &w1, &b1, &w2, &b2}) {
    for (double v : *block) {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

void NplmParams::Validate() const {
  const auto& s = shape;
  if (s.vocab == 0 || s.context == 0 || s.embed == 0 || s.hidden == 0)
    throw Error("NPLM dimensions must be positive");
  if (embedding.size() != s.vocab * s.embed || w1.size() != s.hidden * s.input() ||
      b1.size() != s.hidden || w2.size() != s.vocab * s.hidden || b2.size() != s.vocab)
    throw Error("NPLM parameter blocks do not match the declared shape");
}

Nplm::Nplm(NplmParams params) : params_(std::move(params)) { params_.Validate(); }

void Nplm::CheckContext(std::span<const TokenId> context) const {
  if (context.size() != params_.shape.context)
    throw Error("NPLM context must hold exactly " + std::to_string(params_.shape.context) +
                " ids");
  for (TokenId id : context) {
    if (id < 0 || static_cast<std::size_t>(id) >= params_.shape.vocab)
      throw Error("token id out of range: " + std::to_string(id));
  }
}

NplmActivations Nplm::Forward(std::span<const TokenId> context) const {
  CheckContext(context);
  const auto& s = params_.shape;
  const auto& k = kernels::Active();
  NplmActivations act;
  act.input.resize(s.input());
  for (std::size_t j = 0; j < s.context; ++j) {
    const auto row = params_.EmbeddingRow(context[j]);
    std::copy(row.begin(), row.end(), act.input.begin() + static_cast<std::ptrdiff_t>(j * s.embed));
  }
  act.hidden.resize(s.hidden);
  k.gemv(params_.w1.data(), s.hidden, s.input(), act.input.data(), params_.b1.data(),
         act.hidden.data());
  for (double& h : act.hidden) h = std::tanh(h);
  ForwardFromHidden(act.hidden, &act.logits, &act.probs);
  return act;
}

std::vector<double> Nplm::Hidden(std::span<const TokenId> context) const {
  return Forward(context).hidden;
}

void Nplm::ForwardFromHidden(std::span<const double> hidden, std::vector<double>* logits,
                             std::vector<double>* probs) const {
  const auto& s = params_.shape;
  logits->resize(s.vocab);
  kernels::Active().gemv(params_.w2.data(), s.vocab, s.hidden, hidden.data(),
                         params_.b2.data(), logits->data());
  probs->resize(s.vocab);
  Softmax(*logits, *probs);
}

std::vector<double> Nplm::NextDistribution(std::span<const TokenId> history) const {
  const auto ctx = ContextWindow(history, params_.shape.context);
  return Forward(ctx).probs;
}

double Nplm::Loss(std::span<const TrainExample> batch) const {
  if (batch.empty()) return 0.0;
  double loss = 0.0;
  for (const auto& ex : batch) {
    const auto act = Forward(ex.context);
    loss -= std::log(act.probs[static_cast<std::size_t>(ex.target)]);
  }
  return loss / static_cast<double>(batch.size());
}

double Nplm::Backward(std::span<const TrainExample> batch, NplmParams* grads) const {
  const auto& s = params_.shape;
  const auto& k = kernels::Active();
  *grads = NplmParams::Zeros(s);
  if (batch.empty()) return 0.0;
  const double scale = 1.0 / static_cast<double>(batch.size());
  double loss = 0.0;
  std::vector<double> dlogits(s.vocab), dhidden(s.hidden), dinput(s.input());
  for (const auto& ex : batch) {
    const auto act = Forward(ex.context);
    const auto target = static_cast<std::size_t>(ex.target);
    loss -= std::log(act.probs[target]);

    for (std::size_t v = 0; v < s.vocab; ++v) dlogits[v] = act.probs[v] * scale;
    dlogits[target] -= scale;

    k.ger(1.0, dlogits.data(), s.vocab, act.hidden.data(), s.hidden, grads->w2.data());
    k.axpy(1.0, dlogits.data(), grads->b2.data(), s.vocab);

    std::fill(dhidden.begin(), dhidden.end(), 0.0);
    k.gemv_t_acc(params_.w2.data(), s.vocab, s.hidden, dlogits.data(), dhidden.data());
    for (std::size_t j = 0; j < s.hidden; ++j)
      dhidden[j] *= 1.0 - act.hidden[j] * act.hidden[j];

    k.ger(1.0, dhidden.data(), s.hidden, act.input.data(), s.input(), grads->w1.data());
    k.axpy(1.0, dhidden.data(), grads->b1.data(), s.hidden);

    std::fill(dinput.begin(), dinput.end(), 0.0);
    k.gemv_t_acc(params_.w1.data(), s.hidden, s.input(), dhidden.data(), dinput.data());
    for (std::size_t j = 0; j < s.context; ++j) {
      double* row = grads->embedding.data() + static_cast<std::size_t>(ex.context[j]) * s.embed;
      k.axpy(1.0, dinput.data() + j * s.embed, row, s.embed);
    }
  }
  return loss * scale;
}

std::vector<TrainExample> MakeTrainExamples(const std::vector<std::vector<TokenId>>& sequences,
                                            std::size_t context, bool template_only_loss) {
  std::vector<TrainExample> out;
  for (const auto& seq : sequences) {
    std::size_t start = 1;
    if (template_only_loss) {
      auto sep = std::find(seq.begin(), seq.end(), Vocabulary::kSepId);
      if (sep != seq.end()) start = static_cast<std::size_t>(sep - seq.begin()) + 1;
    }
    for (std::size_t i = std::max<std::size_t>(start, 1); i < seq.size(); ++i) {
      TrainExample ex;
      ex.context = ContextWindow(std::span<const TokenId>(seq).first(i), context);
      ex.target = seq[i];
      out.push_back(std::move(ex));
    }
  }
  return out;
}

void TrainNplmInPlace(Nplm* model, const std::vector<TrainExample>& examples,
                      const TrainConfig& config, TrainReport* report,
                      const std::function<void(int, double)>& log) {
  if (!(config.learning_rate >= 0.0)) throw Error("learning rate must be >= 0");
  if (config.epochs < 0) throw Error("epochs must be >= 0");
  if (config.batch_size == 0) throw Error("batch size must be >= 1");
  TrainReport local;
  TrainReport& rep = report != nullptr ? *report : local;
  rep.initial_loss = model->Loss(examples);
  if (!std::isfinite(rep.initial_loss))
    throw TrainingError("initial loss is not finite");

  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> order(examples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  NplmParams grads;
  std::vector<TrainExample> batch;
  const auto& k = kernels::Active();
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng() % i]);
    }
    for (std::size_t b = 0; b < order.size(); b += config.batch_size) {
      batch.clear();
      for (std::size_t i = b; i < std::min(order.size(), b + config.batch_size); ++i)
        batch.push_back(examples[order[i]]);
      const double loss = model->Backward(batch, &grads);
      if (!std::isfinite(loss))
        throw TrainingError("NPLM training diverged at epoch " + std::to_string(epoch) +
                            " (non-finite loss); lower the learning rate");
      if (config.learning_rate == 0.0) continue;
      NplmParams& p = model->mutable_params();
      const double step = -config.learning_rate;
      k.axpy(step, grads.embedding.data(), p.embedding.data(), p.embedding.size());
      k.axpy(step, grads.w1.data(), p.w1.data(), p.w1.size());
      k.axpy(step, grads.b1.data(), p.b1.data(), p.b1.size());
      k.axpy(step, grads.w2.data(), p.w2.data(), p.w2.size());
      k.axpy(step, grads.b2.data(), p.b2.data(), p.b2.size());
    }
    const double epoch_loss = model->Loss(examples);
    if (!std::isfinite(epoch_loss))
      throw TrainingError("NPLM training diverged at epoch " + std::to_string(epoch) +
                          " (non-finite loss); lower the learning rate");
    rep.epoch_losses.push_back(epoch_loss);
    if (log) log(epoch, epoch_loss);
  }
}

Nplm TrainNplm(const std::vector<std::vector<TokenId>>& sequences, const NplmShape& shape,
               const TrainConfig& config, TrainReport* report,
               const std::function<void(int, double)>& log) {
  if (config.learning_rate < 0.0 || !std::isfinite(config.learning_rate))
    throw Error("learning rate must be a finite non-negative number");
  if (config.epochs < 1) throw Error("epochs must be >= 1");
  Nplm model(NplmParams::Random(shape, config.seed));
  const auto examples = MakeTrainExamples(sequences, shape.context, config.template_only_loss);
  if (examples.empty()) throw TrainingError("no training positions in corpus");
  TrainNplmInPlace(&model, examples, config, report, log);
  return model;
}

}  // namespace stylenlg
