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

#ifndef STYLENLG_CORPUS_H_
#define STYLENLG_CORPUS_H_

// Schema-guided dialogue ingestion: system turns become (meaning
// representation, delexicalized template) pairs, and meaning representations
// are flattened into the plain strings the language models consume.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace stylenlg {

struct ActFrame {
  std::string act;
  std::optional<std::string> slot;
  std::optional<std::string> slot_description;
  // "$slotN" or a literal such as "none" / "intent".
  std::optional<std::string> value;

  bool operator==(const ActFrame&) const = default;
};

struct MeaningRepresentation {
  std::string domain;
  std::vector<ActFrame> frames;

  // Placeholders in frame order.
  std::vector<std::string> Placeholders() const;
  // OFFER(restaurant_name=$slot1), OFFER(city=$slot2)
  std::string ToString() const;

  bool operator==(const MeaningRepresentation&) const = default;
};

class Template {
 public:
  Template() = default;
  explicit Template(std::string text);

  const std::string& text() const { return text_; }
  std::vector<std::string> Tokens() const;
  const std::set<std::string>& slots_used() const { return slots_used_; }

 private:
  std::string text_;
  std::set<std::string> slots_used_;
};

// placeholder -> surface string
using SlotValueMap = std::map<std::string, std::string>;

struct CorpusExample {
  std::string id;
  MeaningRepresentation mr;
  Template tmpl;
  SlotValueMap values;
  std::string utterance;
};

// One action from the raw dialogue file, before multi-value splitting.
struct RawAction {
  std::string act;
  std::optional<std::string> slot;
  std::optional<std::string> slot_description;
  std::vector<std::string> values;
};

// A split frame together with the surface string its placeholder replaces
// (absent for literal values).
struct SplitFrame {
  ActFrame frame;
  std::optional<std::string> surface;
};

// True for values that are kept verbatim instead of delexicalized: "none",
// "dontcare", booleans, and the value of an "intent" slot.
bool IsLiteralValue(const RawAction& action, std::string_view value);

// Splits a k-valued action into k single-valued frames. Each non-literal
// value receives the next placeholder index from *next_index.
std::vector<SplitFrame> SplitMultivalue(const RawAction& action, int* next_index);

// Replaces the leftmost not-yet-replaced occurrence of each value, in the
// given order, with its placeholder. Exact matches are preferred; a
// case-insensitive match is accepted and its surface form recorded.
// Throws DelexicalizationError when a value cannot be located.
std::pair<Template, SlotValueMap> Delexicalize(
    std::string_view utterance,
    const std::vector<std::pair<std::string, std::string>>& placeholder_values);

enum class LexicalizeMode { kPlain, kBracketed };

// Throws LexicalizationError listing placeholders without a map entry.
std::string Lexicalize(const Template& tmpl, const SlotValueMap& values,
                       LexicalizeMode mode = LexicalizeMode::kPlain);

// "restaurants offer restaurant_name name of the restaurant $slot1 ..."
std::string Flatten(const MeaningRepresentation& mr);

// Registered control tokens for conditional training.
class ControlRegistry {
 public:
  ControlRegistry() = default;
  explicit ControlRegistry(std::vector<std::string> tokens);

  // Returns false if already registered. Tokens must look like [NAME].
  bool Register(const std::string& token);
  bool Contains(std::string_view token) const;
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
};

// Registry holding one control token per style.
const ControlRegistry& DefaultControlRegistry();

inline constexpr std::string_view kBos = "[BOS]";
inline constexpr std::string_view kSep = "[SEP]";
inline constexpr std::string_view kEos = "[EOS]";
inline constexpr std::string_view kUnk = "[UNK]";

// "[BOS] <controls> <flattened> [SEP] <template tokens> [EOS]". Throws Error
// for controls missing from the registry.
std::string BuildTrainingString(std::string_view flattened, const Template& tmpl,
                                const std::vector<std::string>& controls,
                                const ControlRegistry& registry =
                                    DefaultControlRegistry());

// The conditioning prefix used at generation time: everything up to and
// including [SEP].
std::string BuildPrompt(std::string_view flattened,
                        const std::vector<std::string>& controls,
                        const ControlRegistry& registry = DefaultControlRegistry());

// service_name -> slot name -> description
class SchemaIndex {
 public:
  void AddServices(const nlohmann::json& schema_array);
  std::optional<std::string> Description(const std::string& service,
                                         const std::string& slot) const;

 private:
  std::map<std::string, std::map<std::string, std::string>> slots_;
};

// "Restaurants_1" -> "Restaurants"
std::string DomainFromService(std::string_view service);

struct ParseStats {
  std::size_t dialogues = 0;
  std::size_t system_turns = 0;
  std::size_t user_turns = 0;
  std::size_t examples = 0;
  std::size_t skipped = 0;
  std::vector<std::string> warnings;
};

// One CorpusExample per system turn whose values can all be located. Throws
// ParseError naming the dialogue id and turn index for malformed records.
std::vector<CorpusExample> ParseDialogues(const nlohmann::json& dialogues,
                                          const SchemaIndex& schema,
                                          ParseStats* stats = nullptr);

nlohmann::json MrToJson(const MeaningRepresentation& mr);
MeaningRepresentation MrFromJson(const nlohmann::json& j);
nlohmann::json ExampleToJson(const CorpusExample& example);
CorpusExample ExampleFromJson(const nlohmann::json& j);

// JSON-lines corpus files: one ExampleToJson record per line.
std::vector<nlohmann::json> ReadJsonLines(const std::string& path);
void WriteJsonLines(const std::string& path, const std::vector<nlohmann::json>& rows);

}  // namespace stylenlg

#endif  // STYLENLG_CORPUS_H_
