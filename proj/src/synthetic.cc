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

#include "stylenlg/synthetic.h"

#include <array>
#include <random>

#include "stylenlg/error.h"
#include "stylenlg/nplm.h"

namespace stylenlg {

namespace {

using json = nlohmann::json;

struct SlotSpec {
  const char* name;
  const char* description;
  std::vector<const char*> values;
  const char* phrase;  // how the template mentions the slot, {} = value
};

const std::vector<SlotSpec>& Slots() {
  static const std::vector<SlotSpec> slots = {
      {"restaurant_name", "name",
       {"Ala Romana", "Blue Fig", "Cafe Rio", "Golden Lotus", "Mint Leaf", "Oak Table",
        "Sakura House", "Little Saigon", "Casa Verde", "Red Lantern"},
       "{}"},
      {"city", "city", {"San Jose", "Oakland", "Berkeley", "Fresno", "Palo Alto"}, "in {}"},
      {"rating", "rating", {"4.5", "3.9", "4.2", "4.8"}, "rated {}"},
      {"cuisine", "cuisine", {"Italian", "Thai", "Mexican", "Indian", "Korean"},
       "serving {} food"},
  };
  return slots;
}

constexpr std::array<const char*, 3> kAdj1 = {"lovely", "charming", "delightful"};
constexpr std::array<const char*, 3> kAdj2 = {"superb", "fantastic", "splendid"};
constexpr std::array<const char*, 3> kAdj3 = {"amazing", "marvelous", "terrific"};

std::string Fill(std::string_view pattern, const std::string& value) {
  std::string out(pattern);
  const auto pos = out.find("{}");
  if (pos != std::string::npos) out.replace(pos, 2, value);
  return out;
}

std::string Render(const std::string& length, bool positive, const std::string& name,
                   const std::string& extra, std::mt19937_64& rng) {
  auto pick = [&rng](const auto& arr) { return std::string(arr[rng() % arr.size()]); };
  const std::string tail = extra.empty() ? "" : " " + extra;
  if (length == "short") {
    return positive ? "enjoy " + pick(kAdj1) + " " + name + tail + " !"
                    : "consider " + name + tail + " .";
  }
  if (length == "medium") {
    return positive ? "you will adore the " + pick(kAdj1) + " " + name + tail + " , a " +
                          pick(kAdj2) + " choice ."
                    : "there is a restaurant called " + name + tail + " on the list .";
  }
  return positive ? "wonderful news , the " + pick(kAdj1) + " " + name + tail + " is a " +
                        pick(kAdj2) + " place and guests find it " + pick(kAdj3) +
                        " every single time ."
                  : "i found one option here , the restaurant is " + name + tail +
                        " and it is listed in the directory .";
}

}  // namespace

SyntheticCorpus MakeSyntheticCorpus(const SyntheticConfig& config) {
  if (config.positive_rate < 0.0 || config.positive_rate > 1.0)
    throw Error("positive rate must lie in [0, 1]");
  std::mt19937_64 rng(config.seed);
  auto uniform = [&rng]() { return UnitUniform(rng()); };
  const auto& slots = Slots();

  SyntheticCorpus out;
  json service = {{"service_name", "Restaurants_1"}, {"slots", json::array()}};
  for (const auto& s : slots)
    service["slots"].push_back({{"name", s.name}, {"description", s.description}});
  out.schema = json::array({service});
  out.dialogues = json::array();

  static const std::array<const char*, 3> kLengths = {"short", "medium", "long"};
  for (std::size_t d = 0; d < config.dialogues; ++d) {
    json dialogue = {{"dialogue_id", "syn_" + std::to_string(d)},
                     {"services", json::array({"Restaurants_1"})},
                     {"turns", json::array()}};
    for (std::size_t t = 0; t < config.system_turns_per_dialogue; ++t) {
      dialogue["turns"].push_back(
          {{"speaker", "USER"},
           {"utterance", "i want a place to eat"},
           {"frames", json::array({{{"service", "Restaurants_1"}, {"actions", json::array()}}})}});

      const std::string length = kLengths[rng() % kLengths.size()];
      const bool positive = uniform() < config.positive_rate;
      const auto& name_slot = slots[0];
      const std::string name = name_slot.values[rng() % name_slot.values.size()];
      json actions = json::array(
          {{{"act", "OFFER"}, {"slot", name_slot.name}, {"values", json::array({name})}}});
      std::string extra;
      if (uniform() < config.second_slot_rate) {
        const auto& s = slots[1 + rng() % (slots.size() - 1)];
        const std::string value = s.values[rng() % s.values.size()];
        const char* act = (rng() % 2 == 0) ? "OFFER" : "INFORM";
        actions.push_back({{"act", act}, {"slot", s.name}, {"values", json::array({value})}});
        extra = Fill(s.phrase, value);
      }
      dialogue["turns"].push_back(
          {{"speaker", "SYSTEM"},
           {"utterance", Render(length, positive, name, extra, rng)},
           {"frames", json::array({{{"service", "Restaurants_1"}, {"actions", actions}}})}});
      out.sentiment.push_back(positive ? "positive" : "neutral");
      out.length.push_back(length);
    }
    out.dialogues.push_back(std::move(dialogue));
  }
  return out;
}

SyntheticDataset ParseSyntheticCorpus(const SyntheticCorpus& corpus) {
  SchemaIndex schema;
  schema.AddServices(corpus.schema);
  ParseStats stats;
  SyntheticDataset out;
  out.examples = ParseDialogues(corpus.dialogues, schema, &stats);
  if (out.examples.size() != corpus.sentiment.size())
    throw Error("synthetic corpus lost examples during parsing");
  for (std::size_t i = 0; i < out.examples.size(); ++i)
    out.sentiment_labels.push_back({out.examples[i].tmpl.text(), corpus.sentiment[i]});
  return out;
}

}  // namespace stylenlg
