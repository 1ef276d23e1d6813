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

#ifndef STYLENLG_RUN_CONFIG_H_
#define STYLENLG_RUN_CONFIG_H_

// Generation settings as the command line sees them, and the checks run
// before any model is touched.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylenlg/pplm.h"
#include "stylenlg/style.h"

namespace stylenlg {

// "positive" or "positive:1.5".
struct StyleRequest {
  Style style = Style::kShort;
  double lambda = 1.0;
  bool explicit_lambda = false;
};

// Throws Error for an unknown style or a malformed weight.
StyleRequest ParseStyleRequest(std::string_view text);
std::string FormatStyleRequest(const StyleRequest& request);

struct RunConfig {
  std::string subcommand = "generate";
  std::string method = "baseline";  // baseline | ct | wd | bswd | pplm
  std::vector<StyleRequest> styles;
  std::size_t beam = 1;
  std::size_t top_k = 5;
  std::size_t max_len = 40;
  std::string lm_kind = "nplm";
  // The language model was trained with control tokens, so lexical styles
  // can ride along with a discriminator method as control prefixes.
  bool lm_conditional = false;
  PplmConfig pplm;
  std::uint64_t seed = 1;
};

bool IsKnownMethod(std::string_view method);

// Every violated constraint, in a fixed order. Empty when the run is valid.
std::vector<std::string> ValidateConfig(const RunConfig& config);

}  // namespace stylenlg

#endif  // STYLENLG_RUN_CONFIG_H_
