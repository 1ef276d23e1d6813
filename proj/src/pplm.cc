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

#include "stylenlg/pplm.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "stylenlg/error.h"
#include "stylenlg/kernels.h"

namespace stylenlg {

namespace {

constexpr double kFloor = 1e-12;

std::vector<double> LogSoftmax(std::span<const double> logits) {
  double max = -INFINITY;
  for (double v : logits) max = std::max(max, v);
  double sum = 0.0;
  for (double v : logits) sum += std::exp(v - max);
  const double lse = max + std::log(sum);
  std::vector<double> out(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) out[i] = logits[i] - lse;
  return out;
}

std::vector<double> PerturbedLogits(const Nplm& lm, const PerturbationState& state) {
  std::vector<double> h(state.hidden);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] += state.delta_h[i];
  std::vector<double> logits, probs;
  lm.ForwardFromHidden(h, &logits, &probs);
  return logits;
}

// Representation of a soft token with distribution `p` plus the map from a
// gradient on that representation to per-token scores s_w = dCE/dp_w.
struct SoftRep {
  std::vector<double> rep;
  std::vector<double> e;     // E^T p
  std::vector<double> x;     // hidden mode input (window embeddings, e)
};

SoftRep SoftRepresentation(const RepresentationProvider& provider,
                           std::span<const TokenId> window, std::span<const double> p) {
  const auto& np = provider.nplm().params();
  const auto& s = np.shape;
  const auto& k = kernels::Active();
  SoftRep out;
  out.e.assign(s.embed, 0.0);
  k.gemv_t_acc(np.embedding.data(), s.vocab, s.embed, p.data(), out.e.data());
  if (provider.mode() == RepresentationProvider::Mode::kBagOfEmbeddings) {
    out.rep = out.e;
    return out;
  }
  out.x.resize(s.input());
  for (std::size_t j = 0; j + 1 < s.context; ++j) {
    const auto row = np.EmbeddingRow(window[j]);
    std::copy(row.begin(), row.end(), out.x.begin() + static_cast<std::ptrdiff_t>(j * s.embed));
  }
  std::copy(out.e.begin(), out.e.end(),
            out.x.begin() + static_cast<std::ptrdiff_t>((s.context - 1) * s.embed));
  out.rep.resize(s.hidden);
  k.gemv(np.w1.data(), s.hidden, s.input(), out.x.data(), np.b1.data(), out.rep.data());
  for (double& v : out.rep) v = std::tanh(v);
  return out;
}

// s_w = dCE/dp_w given g = dCE/drep.
std::vector<double> TokenScores(const RepresentationProvider& provider, const SoftRep& soft,
                                std::span<const double> g) {
  const auto& np = provider.nplm().params();
  const auto& s = np.shape;
  const auto& k = kernels::Active();
  std::vector<double> ge;
  if (provider.mode() == RepresentationProvider::Mode::kBagOfEmbeddings) {
    ge.assign(g.begin(), g.end());
  } else {
    std::vector<double> gpre(s.hidden);
    for (std::size_t i = 0; i < s.hidden; ++i) gpre[i] = g[i] * (1.0 - soft.rep[i] * soft.rep[i]);
    std::vector<double> gx(s.input(), 0.0);
    k.gemv_t_acc(np.w1.data(), s.hidden, s.input(), gpre.data(), gx.data());
    ge.assign(gx.begin() + static_cast<std::ptrdiff_t>((s.context - 1) * s.embed), gx.end());
  }
  std::vector<double> scores(s.vocab);
  const std::vector<double> zero(s.vocab, 0.0);
  k.gemv(np.embedding.data(), s.vocab, s.embed, ge.data(), zero.data(), scores.data());
  return scores;
}

}  // namespace

std::vector<std::string> PplmConfig::Diagnostics() const {
  std::vector<std::string> out;
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) out.push_back("PPLM step size α ≥ 0");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) out.push_back("PPLM KL weight λ ≥ 0");
  if (!(gamma_gm >= 0.0 && gamma_gm <= 1.0)) out.push_back("PPLM fusion exponent γ in [0, 1]");
  if (iterations < 0) out.push_back("PPLM iterations ≥ 0");
  if (max_repeat < 1) out.push_back("PPLM max_repeat ≥ 1");
  return out;
}

bool ReadsHiddenState(const Nplm& lm, const StyleClassifier& classifier) {
  const auto& provider = classifier.provider();
  return provider.mode() == RepresentationProvider::Mode::kNplmHidden &&
         (&provider.nplm() == &lm || provider.nplm().params() == lm.params());
}

double KlFromLogits(std::span<const double> a, std::span<const double> b) {
  const auto la = LogSoftmax(a);
  const auto lb = LogSoftmax(b);
  double kl = 0.0;
  for (std::size_t i = 0; i < la.size(); ++i) kl += std::exp(la[i]) * (la[i] - lb[i]);
  return kl;
}

PplmObjectiveResult PplmObjective(const Nplm& lm, const PerturbationState& state,
                                  std::span<const PplmDiscriminator> discriminators,
                                  double lambda) {
  const auto& shape = lm.shape();
  const std::size_t v = shape.vocab;
  const auto& k = kernels::Active();
  if (state.delta_h.size() != shape.hidden || state.hidden.size() != shape.hidden)
    throw Error("perturbation does not match the hidden dimension");

  const auto logits = PerturbedLogits(lm, state);
  const auto logp_t = LogSoftmax(logits);
  const auto logp = LogSoftmax(state.base_logits);
  std::vector<double> pt(v);
  for (std::size_t i = 0; i < v; ++i) pt[i] = std::exp(logp_t[i]);

  PplmObjectiveResult r;
  for (std::size_t i = 0; i < v; ++i) r.kl += pt[i] * (logp_t[i] - logp[i]);
  std::vector<double> dkl(v);
  for (std::size_t i = 0; i < v; ++i) dkl[i] = pt[i] * (logp_t[i] - logp[i] - r.kl);

  std::vector<double> dce(v, 0.0);
  std::vector<double> direct_grad(shape.hidden, 0.0);
  for (std::size_t j = 0; j < discriminators.size(); ++j) {
    const auto& d = discriminators[j];
    const auto& clf = *d.classifier;
    const auto& provider = clf.provider();
    if (provider.vocab().size() != v)
      throw Error("discriminator vocabulary does not match the language model");
    const bool direct = ReadsHiddenState(lm, clf);
    SoftRep soft;
    if (direct) {
      soft.rep = state.hidden;
      for (std::size_t i = 0; i < soft.rep.size(); ++i) soft.rep[i] += state.delta_h[i];
    } else {
      std::vector<TokenId> window;
      if (provider.mode() == RepresentationProvider::Mode::kNplmHidden)
        window = ContextWindow(state.generated, provider.nplm().shape().context - 1);
      soft = SoftRepresentation(provider, window, pt);
    }
    const double t = static_cast<double>(state.generated.size() + 1);
    std::vector<double> mean(soft.rep.size());
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double prev = state.rep_sums.empty() ? 0.0 : state.rep_sums[j][i];
      mean[i] = (prev + soft.rep[i]) / t;
    }
    auto q = clf.ProbaFromRepresentation(mean);
    const auto lz = LogSoftmax(clf.Logits(mean));
    r.ce -= d.weight * lz[d.target_class];
    q[d.target_class] -= 1.0;
    std::vector<double> g(mean.size(), 0.0);
    const auto& cp = clf.params();
    k.gemv_t_acc(cp.weight.data(), cp.n_classes(), cp.rep_dim, q.data(), g.data());
    for (double& x : g) x *= d.weight / t;
    if (direct) {
      for (std::size_t i = 0; i < shape.hidden; ++i) direct_grad[i] += g[i];
      continue;
    }
    const auto s = TokenScores(provider, soft, g);
    double mean_s = 0.0;
    for (std::size_t i = 0; i < v; ++i) mean_s += pt[i] * s[i];
    for (std::size_t i = 0; i < v; ++i) dce[i] += pt[i] * (s[i] - mean_s);
  }

  r.grad_ce = direct_grad;
  r.grad_kl.assign(shape.hidden, 0.0);
  const auto& w2 = lm.params().w2;
  k.gemv_t_acc(w2.data(), v, shape.hidden, dce.data(), r.grad_ce.data());
  k.gemv_t_acc(w2.data(), v, shape.hidden, dkl.data(), r.grad_kl.data());
  r.grad.resize(shape.hidden);
  for (std::size_t i = 0; i < shape.hidden; ++i) r.grad[i] = r.grad_ce[i] + lambda * r.grad_kl[i];
  r.loss = r.ce + lambda * r.kl;
  if (!std::isfinite(r.loss)) throw Error("PPLM objective is not finite");
  return r;
}

void PplmUpdate(std::span<double> delta_h, std::span<const double> grad_ce,
                std::span<const double> grad_kl, double alpha, double lambda) {
  if (grad_ce.size() != delta_h.size() || grad_kl.size() != delta_h.size())
    throw Error("gradient shape does not match the perturbation");
  if (alpha == 0.0) return;
  for (std::size_t i = 0; i < delta_h.size(); ++i)
    delta_h[i] -= alpha * (grad_ce[i] + lambda * grad_kl[i]);
}

std::vector<double> PostNormFusion(std::span<const double> perturbed,
                                   std::span<const double> base, double gamma) {
  if (perturbed.size() != base.size()) throw Error("fusion inputs differ in length");
  if (gamma == 0.0) return {base.begin(), base.end()};
  if (gamma == 1.0) return {perturbed.begin(), perturbed.end()};
  std::vector<double> out(base.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double a = std::max(perturbed[i], kFloor);
    const double b = std::max(base[i], kFloor);
    out[i] = std::exp(gamma * std::log(a) + (1.0 - gamma) * std::log(b));
    sum += out[i];
  }
  for (double& x : out) x /= sum;
  return out;
}

PplmResult PplmGenerate(const Nplm& lm, std::span<const PplmDiscriminator> discriminators,
                        const PplmConfig& config, std::span<const TokenId> prompt) {
  const auto diags = config.Diagnostics();
  if (!diags.empty()) throw Error("invalid PPLM config: " + diags.front());
  for (const auto& d : discriminators) {
    if (d.classifier == nullptr || d.target_class >= d.classifier->class_names().size())
      throw Error("invalid PPLM discriminator");
  }
  const auto& shape = lm.shape();
  std::mt19937_64 rng(config.seed);
  PplmResult result;
  std::vector<TokenId> history(prompt.begin(), prompt.end());
  std::vector<TokenId> generated;
  PerturbationState state;
  std::vector<bool> direct;
  for (const auto& d : discriminators) {
    state.rep_sums.emplace_back(d.classifier->provider().dim(), 0.0);
    direct.push_back(ReadsHiddenState(lm, *d.classifier));
  }

  double kl_total = 0.0;
  std::size_t run = 0;
  for (std::size_t step = 0; step < config.max_len; ++step) {
    const auto act = lm.Forward(ContextWindow(history, shape.context));
    state.hidden = act.hidden;
    state.base_logits = act.logits;
    state.delta_h.assign(shape.hidden, 0.0);
    state.generated = generated;

    for (int it = 0; it < config.iterations && config.alpha != 0.0; ++it) {
      const auto obj = PplmObjective(lm, state, discriminators, config.lambda);
      PplmUpdate(state.delta_h, obj.grad_ce, obj.grad_kl, config.alpha, config.lambda);
    }
    const bool perturbed = std::any_of(state.delta_h.begin(), state.delta_h.end(),
                                       [](double x) { return x != 0.0; });
    std::vector<double> fused = act.probs;
    if (perturbed) {
      const auto logits = PerturbedLogits(lm, state);
      kl_total += KlFromLogits(logits, act.logits);
      fused = PostNormFusion(Softmax(logits), act.probs, config.gamma_gm);
    }
    ++result.steps;

    std::size_t token = ArgMax(fused);
    if (config.sample) {
      const double u = UnitUniform(rng());
      double acc = 0.0;
      token = fused.size() - 1;
      for (std::size_t i = 0; i < fused.size(); ++i) {
        acc += fused[i];
        if (u < acc) {
          token = i;
          break;
        }
      }
    }
    const TokenId id = static_cast<TokenId>(token);
    result.generation.lm_logprob += std::log(act.probs[token]);
    result.generation.score += std::log(fused[token]);
    if (id == Vocabulary::kEosId) {
      result.generation.finished = true;
      break;
    }
    run = (!generated.empty() && generated.back() == id) ? run + 1 : 1;
    generated.push_back(id);
    history.push_back(id);
    if (run >= config.max_repeat) {
      result.degenerated = true;
      break;
    }
    for (std::size_t j = 0; j < discriminators.size(); ++j) {
      auto& sum = state.rep_sums[j];
      if (direct[j]) {
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += state.hidden[i] + state.delta_h[i];
        continue;
      }
      const auto rep = discriminators[j].classifier->provider().AtPosition(generated,
                                                                           generated.size() - 1);
      for (std::size_t i = 0; i < rep.size(); ++i) sum[i] += rep[i];
    }
  }
  result.generation.tokens = generated;
  result.mean_kl = result.steps == 0 ? 0.0 : kl_total / static_cast<double>(result.steps);
  return result;
}

}  // namespace stylenlg
