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

#ifndef STYLENLG_TESTS_SER_CASES_H_
#define STYLENLG_TESTS_SER_CASES_H_

// Twenty slot error rate cases with counts worked out by hand.

#include <set>
#include <string>
#include <vector>

#include "stylenlg/metrics.h"
#include "stylenlg/tokenizer.h"

namespace stylenlg::testing {

inline std::set<std::string> Slots(std::initializer_list<int> ids) {
  std::set<std::string> out;
  for (int i : ids) out.insert(MakePlaceholder(i));
  return out;
}

struct SerCase {
  std::set<std::string> mr;
  std::string output;
  SerBreakdown expect;
};

inline const std::vector<SerCase>& SerCases() {
  static const std::vector<SerCase> cases = {
      {Slots({1, 2}), "there is $slot1 .", {1, 0, 0, 2, 0.5}},
      {Slots({1, 2}), "$slot1 and $slot1 at $slot2", {0, 1, 0, 2, 0.5}},
      {Slots({1, 2}), "$slot1 $slot2 $slot3", {0, 0, 1, 2, 0.5}},
      {Slots({}), "goodbye .", {0, 0, 0, 0, 0.0}},
      {Slots({}), "see $slot1 .", {0, 0, 1, 0, 1.0}},
      {Slots({}), "$slot1 $slot1 $slot2", {0, 0, 2, 0, 2.0}},
      {Slots({1}), "$slot1 .", {0, 0, 0, 1, 0.0}},
      {Slots({1}), "nothing here", {1, 0, 0, 1, 1.0}},
      {Slots({1}), "$slot1 $slot1 $slot1", {0, 1, 0, 1, 1.0}},
      {Slots({1, 2, 3}), "", {3, 0, 0, 3, 1.0}},
      {Slots({1, 2, 3}), "$slot1 $slot1 $slot4 $slot4", {2, 1, 1, 3, 4.0 / 3.0}},
      {Slots({1, 2}), "$slot2 then $slot1", {0, 0, 0, 2, 0.0}},
      {Slots({1, 2}), "$slot3 $slot4 $slot5", {2, 0, 3, 2, 2.5}},
      {Slots({1, 2, 3, 4}), "$slot1 $slot2 $slot2 $slot3 $slot3 $slot4", {0, 2, 0, 4, 0.5}},
      {Slots({1}), "$slot10 .", {1, 0, 1, 1, 2.0}},
      {Slots({1, 2}), "$slot1, $slot2.", {0, 0, 0, 2, 0.0}},
      {Slots({1}), "slot1 and $ slot1", {1, 0, 0, 1, 1.0}},
      {Slots({1, 2}), "$slot1 $slot1 $slot9 $slot9 $slot9", {1, 1, 1, 2, 1.5}},
      {Slots({1, 2, 3}), "$slot3 .", {2, 0, 0, 3, 2.0 / 3.0}},
      {Slots({2}), "$slot2 $slot1", {0, 0, 1, 1, 1.0}},
  };
  return cases;
}

}  // namespace stylenlg::testing

#endif  // STYLENLG_TESTS_SER_CASES_H_
