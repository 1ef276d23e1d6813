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

#include "stylenlg/run_config.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

#include "stylenlg/error.h"

namespace stylenlg {

StyleRequest ParseStyleRequest(std::string_view text) {
  StyleRequest req;
  std::string_view name = text;
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    name = text.substr(0, colon);
    const std::string weight(text.substr(colon + 1));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(weight, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (weight.empty() || used != weight.size())
      throw Error("malformed style weight in \"" + std::string(text) + "\"");
    req.lambda = value;
    req.explicit_lambda = true;
  }
  const auto style = StyleFromName(name);
  if (!style) throw Error("unknown style \"" + std::string(name) + "\"");
  req.style = *style;
  return req;
}

std::string FormatStyleRequest(const StyleRequest& request) {
  std::string out(StyleName(request.style));
  if (request.explicit_lambda) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), ":%g", request.lambda);
    out += buf;
  }
  return out;
}

bool IsKnownMethod(std::string_view method) {
  return method == "baseline" || method == "ct" || method == "wd" || method == "bswd" ||
         method == "pplm";
}

std::vector<std::string> ValidateConfig(const RunConfig& config) {
  std::vector<std::string> out;
  const std::string& m = config.method;
  if (!IsKnownMethod(m)) {
    out.push_back("unknown method \"" + m + "\"");
    return out;
  }
  if (config.beam < 1) out.push_back("beam width ≥ 1");
  if (config.top_k < 1) out.push_back("candidate set size K ≥ 1");
  if (config.max_len < 1) out.push_back("maximum length ≥ 1");
  if (m == "wd" && config.beam > 1) out.push_back("wd decodes with beam width 1; use bswd");

  std::set<Style> seen;
  bool any_semantic = false;
  bool lexical_without_ct = false;
  for (const auto& r : config.styles) {
    if (!seen.insert(r.style).second)
      out.push_back("style " + std::string(StyleName(r.style)) + " given twice");
    if (!(r.lambda > 0.0) || !std::isfinite(r.lambda)) out.push_back("style weights λ > 0");
    if (IsLexical(r.style)) {
      if (m != "ct" && m != "baseline" && !config.lm_conditional) lexical_without_ct = true;
    } else {
      any_semantic = true;
    }
  }
  if (lexical_without_ct) out.push_back("lexical styles require ct");
  if (m == "baseline" && !config.styles.empty())
    out.push_back("baseline generation takes no styles");
  if ((m == "wd" || m == "bswd" || m == "pplm") && !any_semantic)
    out.push_back(m + " needs at least one semantic style");
  if (m == "pplm") {
    if (config.lm_kind != "nplm") out.push_back("pplm requires an nplm language model");
    for (auto& d : config.pplm.Diagnostics()) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace stylenlg
