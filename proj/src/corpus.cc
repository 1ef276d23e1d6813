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

#include "stylenlg/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "stylenlg/error.h"
#include "stylenlg/tokenizer.h"

namespace stylenlg {

using nlohmann::json;

std::vector<std::string> MeaningRepresentation::Placeholders() const {
  std::vector<std::string> out;
  for (const auto& f : frames) {
    if (f.value && IsPlaceholder(*f.value)) out.push_back(*f.value);
  }
  return out;
}

std::string MeaningRepresentation::ToString() const {
  std::string out;
  for (const auto& f : frames) {
    if (!out.empty()) out += ", ";
    out += f.act + "(";
    if (f.slot) out += *f.slot;
    if (f.value) out += "=" + *f.value;
    out += ")";
  }
  return out;
}

Template::Template(std::string text) : text_(std::move(text)) {
  for (const auto& tok : Tokenize(text_)) {
    if (IsPlaceholder(tok)) slots_used_.insert(tok);
  }
}

std::vector<std::string> Template::Tokens() const { return Tokenize(text_); }

bool IsLiteralValue(const RawAction& action, std::string_view value) {
  if (action.slot && ToLower(*action.slot) == "intent") return true;
  const std::string lower = ToLower(value);
  return lower == "none" || lower == "dontcare" || lower == "true" ||
         lower == "false" || lower == "intent";
}

std::vector<SplitFrame> SplitMultivalue(const RawAction& action, int* next_index) {
  std::vector<SplitFrame> out;
  ActFrame base{action.act, action.slot, action.slot_description, std::nullopt};
  if (action.values.empty()) {
    out.push_back({base, std::nullopt});
    return out;
  }
  for (const auto& v : action.values) {
    SplitFrame split{base, std::nullopt};
    if (IsLiteralValue(action, v)) {
      split.frame.value = action.slot && ToLower(*action.slot) == "intent"
                              ? std::string("intent")
                              : ToLower(v);
    } else {
      split.frame.value = MakePlaceholder((*next_index)++);
      split.surface = v;
    }
    out.push_back(std::move(split));
  }
  return out;
}

namespace {

struct Segment {
  std::string text;
  bool placeholder = false;
};

std::size_t FindCaseInsensitive(std::string_view hay, std::string_view needle) {
  if (needle.empty() || needle.size() > hay.size()) return std::string::npos;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < needle.size(); ++k) {
      if (std::tolower(static_cast<unsigned char>(hay[i + k])) !=
          std::tolower(static_cast<unsigned char>(needle[k]))) {
        match = false;
        break;
      }
    }
    if (match) return i;
  }
  return std::string::npos;
}

// Leftmost match across literal segments; exact first, then case-folded.
bool ReplaceLeftmost(std::vector<Segment>* segments, const std::string& value,
                     const std::string& placeholder, std::string* surface) {
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t s = 0; s < segments->size(); ++s) {
      Segment& seg = (*segments)[s];
      if (seg.placeholder) continue;
      const std::size_t pos = pass == 0 ? seg.text.find(value)
                                        : FindCaseInsensitive(seg.text, value);
      if (pos == std::string::npos) continue;
      *surface = seg.text.substr(pos, value.size());
      Segment before{seg.text.substr(0, pos), false};
      Segment after{seg.text.substr(pos + value.size()), false};
      Segment hole{placeholder, true};
      segments->erase(segments->begin() + static_cast<std::ptrdiff_t>(s));
      segments->insert(segments->begin() + static_cast<std::ptrdiff_t>(s),
                       {before, hole, after});
      return true;
    }
  }
  return false;
}

}  // namespace

std::pair<Template, SlotValueMap> Delexicalize(
    std::string_view utterance,
    const std::vector<std::pair<std::string, std::string>>& placeholder_values) {
  std::vector<Segment> segments{{std::string(utterance), false}};
  SlotValueMap map;
  for (const auto& [placeholder, value] : placeholder_values) {
    std::string surface;
    if (!ReplaceLeftmost(&segments, value, placeholder, &surface)) {
      throw DelexicalizationError(value);
    }
    map[placeholder] = surface;
  }
  std::string text;
  for (const auto& seg : segments) text += seg.text;
  return {Template(std::move(text)), std::move(map)};
}

std::string Lexicalize(const Template& tmpl, const SlotValueMap& values,
                       LexicalizeMode mode) {
  std::vector<std::string> missing;
  for (const auto& slot : tmpl.slots_used()) {
    if (!values.contains(slot)) missing.push_back(slot);
  }
  if (!missing.empty()) throw LexicalizationError(std::move(missing));

  // Placeholders are substituted in place so the original spacing survives.
  const std::string& text = tmpl.text();
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.compare(i, 5, "$slot") == 0) {
      std::size_t j = i + 5;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const std::string token = text.substr(i, j - i);
      auto it = values.find(token);
      if (IsPlaceholder(token) && it != values.end()) {
        out += mode == LexicalizeMode::kBracketed ? "[" + it->second + "]" : it->second;
        i = j;
        continue;
      }
    }
    out += text[i++];
  }
  return out;
}

std::string Flatten(const MeaningRepresentation& mr) {
  std::vector<std::string> parts;
  auto add = [&parts](const std::string& s) {
    const std::string norm = NormalizeWhitespace(s);
    if (!norm.empty()) parts.push_back(norm);
  };
  add(mr.domain);
  for (const auto& f : mr.frames) {
    add(f.act);
    if (f.slot) add(*f.slot);
    if (f.slot_description) add(*f.slot_description);
    if (f.value) add(*f.value);
  }
  // Placeholders are already lower case, so lowering the whole string keeps
  // them verbatim.
  return ToLower(JoinTokens(parts));
}

ControlRegistry::ControlRegistry(std::vector<std::string> tokens) {
  for (auto& t : tokens) Register(t);
}

bool ControlRegistry::Register(const std::string& token) {
  if (!IsSpecialToken(token)) throw Error("control token must look like [NAME]: " + token);
  if (Contains(token)) return false;
  tokens_.push_back(token);
  return true;
}

bool ControlRegistry::Contains(std::string_view token) const {
  return std::find(tokens_.begin(), tokens_.end(), token) != tokens_.end();
}

const ControlRegistry& DefaultControlRegistry() {
  static const ControlRegistry registry({
      "[LENGTH_SHORT]", "[LENGTH_LONG]", "[HAS_RARE_WORD]", "[FIRST_PERSON]",
      "[SECOND_PERSON]", "[DESCRIPTIVE]", "[FORMAL]", "[NEGATIVE]", "[POSITIVE]",
      "[EMPATHY]"});
  return registry;
}

std::string BuildPrompt(std::string_view flattened,
                        const std::vector<std::string>& controls,
                        const ControlRegistry& registry) {
  std::string out(kBos);
  for (const auto& c : controls) {
    if (!registry.Contains(c)) throw Error("unregistered control token: " + c);
    out += " " + c;
  }
  const std::string flat = NormalizeWhitespace(flattened);
  if (!flat.empty()) out += " " + flat;
  out += " ";
  out += kSep;
  return out;
}

std::string BuildTrainingString(std::string_view flattened, const Template& tmpl,
                                const std::vector<std::string>& controls,
                                const ControlRegistry& registry) {
  std::string out = BuildPrompt(flattened, controls, registry);
  const auto tokens = tmpl.Tokens();
  if (!tokens.empty()) out += " " + JoinTokens(tokens);
  out += " ";
  out += kEos;
  return out;
}

void SchemaIndex::AddServices(const json& schema_array) {
  if (!schema_array.is_array()) throw ParseError("schema file must hold a JSON array");
  for (const auto& service : schema_array) {
    if (!service.contains("service_name")) throw ParseError("schema entry without service_name");
    auto& slots = slots_[service.at("service_name").get<std::string>()];
    if (!service.contains("slots")) continue;
    for (const auto& slot : service.at("slots")) {
      slots[slot.at("name").get<std::string>()] =
          slot.value("description", std::string());
    }
  }
}

std::optional<std::string> SchemaIndex::Description(const std::string& service,
                                                    const std::string& slot) const {
  auto s = slots_.find(service);
  if (s == slots_.end()) return std::nullopt;
  auto d = s->second.find(slot);
  if (d == s->second.end() || d->second.empty()) return std::nullopt;
  return d->second;
}

std::string DomainFromService(std::string_view service) {
  const std::size_t us = service.rfind('_');
  if (us != std::string_view::npos && us + 1 < service.size()) {
    const std::string_view tail = service.substr(us + 1);
    if (std::all_of(tail.begin(), tail.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return std::string(service.substr(0, us));
  }
  return std::string(service);
}

namespace {

std::string Where(const std::string& dialogue_id, std::size_t turn) {
  return "dialogue " + dialogue_id + " turn " + std::to_string(turn);
}

CorpusExample ParseSystemTurn(const json& turn, const SchemaIndex& schema,
                              const std::string& dialogue_id, std::size_t turn_idx) {
  if (!turn.contains("utterance") || !turn.at("utterance").is_string())
    throw ParseError(Where(dialogue_id, turn_idx) + ": missing utterance");
  if (!turn.contains("frames") || !turn.at("frames").is_array())
    throw ParseError(Where(dialogue_id, turn_idx) + ": missing frames");

  CorpusExample ex;
  ex.id = dialogue_id + ":" + std::to_string(turn_idx);
  ex.utterance = turn.at("utterance").get<std::string>();

  int next_index = 1;
  std::vector<std::pair<std::string, std::string>> to_replace;
  for (const auto& frame : turn.at("frames")) {
    if (!frame.contains("service") || !frame.at("service").is_string() ||
        !frame.contains("actions") || !frame.at("actions").is_array())
      throw ParseError(Where(dialogue_id, turn_idx) + ": frame needs service and actions");
    const std::string service = frame.at("service").get<std::string>();
    if (ex.mr.domain.empty()) ex.mr.domain = DomainFromService(service);
    for (const auto& action : frame.at("actions")) {
      if (!action.contains("act") || !action.at("act").is_string())
        throw ParseError(Where(dialogue_id, turn_idx) + ": action without act");
      RawAction raw;
      raw.act = action.at("act").get<std::string>();
      if (action.contains("slot") && action.at("slot").is_string() &&
          !action.at("slot").get<std::string>().empty()) {
        raw.slot = action.at("slot").get<std::string>();
        raw.slot_description = schema.Description(service, *raw.slot);
      }
      if (action.contains("values")) {
        if (!action.at("values").is_array())
          throw ParseError(Where(dialogue_id, turn_idx) + ": values must be a list");
        for (const auto& v : action.at("values")) raw.values.push_back(v.get<std::string>());
      }
      for (auto& split : SplitMultivalue(raw, &next_index)) {
        if (split.surface) to_replace.emplace_back(*split.frame.value, *split.surface);
        ex.mr.frames.push_back(std::move(split.frame));
      }
    }
  }
  auto [tmpl, values] = Delexicalize(ex.utterance, to_replace);
  ex.tmpl = std::move(tmpl);
  ex.values = std::move(values);
  return ex;
}

}  // namespace

std::vector<CorpusExample> ParseDialogues(const json& dialogues, const SchemaIndex& schema,
                                          ParseStats* stats) {
  ParseStats local;
  ParseStats& st = stats != nullptr ? *stats : local;
  std::vector<CorpusExample> out;
  if (!dialogues.is_array()) throw ParseError("dialogue file must hold a JSON array");
  for (std::size_t d = 0; d < dialogues.size(); ++d) {
    const json& dialogue = dialogues[d];
    const std::string id = dialogue.contains("dialogue_id") && dialogue.at("dialogue_id").is_string()
                               ? dialogue.at("dialogue_id").get<std::string>()
                               : "#" + std::to_string(d);
    if (!dialogue.contains("turns") || !dialogue.at("turns").is_array())
      throw ParseError("dialogue " + id + ": missing turns");
    ++st.dialogues;
    const json& turns = dialogue.at("turns");
    for (std::size_t t = 0; t < turns.size(); ++t) {
      const json& turn = turns[t];
      if (!turn.contains("speaker") || !turn.at("speaker").is_string())
        throw ParseError(Where(id, t) + ": missing speaker");
      if (turn.at("speaker").get<std::string>() != "SYSTEM") {
        ++st.user_turns;
        continue;
      }
      ++st.system_turns;
      try {
        out.push_back(ParseSystemTurn(turn, schema, id, t));
        ++st.examples;
      } catch (const DelexicalizationError& e) {
        ++st.skipped;
        st.warnings.push_back(Where(id, t) + ": " + e.what());
      } catch (const json::exception& e) {
        throw ParseError(Where(id, t) + ": " + e.what());
      }
    }
  }
  return out;
}

json MrToJson(const MeaningRepresentation& mr) {
  json frames = json::array();
  for (const auto& f : mr.frames) {
    json jf = {{"act", f.act}};
    if (f.slot) jf["slot"] = *f.slot;
    if (f.slot_description) jf["slot_description"] = *f.slot_description;
    if (f.value) jf["value"] = *f.value;
    frames.push_back(std::move(jf));
  }
  return {{"domain", mr.domain}, {"frames", std::move(frames)}};
}

MeaningRepresentation MrFromJson(const json& j) {
  MeaningRepresentation mr;
  mr.domain = j.at("domain").get<std::string>();
  for (const auto& jf : j.at("frames")) {
    ActFrame f;
    f.act = jf.at("act").get<std::string>();
    if (jf.contains("slot")) f.slot = jf.at("slot").get<std::string>();
    if (jf.contains("slot_description"))
      f.slot_description = jf.at("slot_description").get<std::string>();
    if (jf.contains("value")) f.value = jf.at("value").get<std::string>();
    mr.frames.push_back(std::move(f));
  }
  return mr;
}

json ExampleToJson(const CorpusExample& example) {
  json j;
  j["id"] = example.id;
  j["mr"] = MrToJson(example.mr);
  j["template"] = example.tmpl.text();
  j["values"] = example.values;
  j["utterance"] = example.utterance;
  return j;
}

CorpusExample ExampleFromJson(const json& j) {
  CorpusExample ex;
  ex.id = j.value("id", std::string());
  ex.mr = MrFromJson(j.at("mr"));
  ex.tmpl = Template(j.at("template").get<std::string>());
  if (j.contains("values")) ex.values = j.at("values").get<SlotValueMap>();
  ex.utterance = j.value("utterance", std::string());
  return ex;
}

std::vector<json> ReadJsonLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<json> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (NormalizeWhitespace(line).empty()) continue;
    try {
      rows.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rows;
}

void WriteJsonLines(const std::string& path, const std::vector<json>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  for (const auto& r : rows) out << r.dump() << '\n';
  if (!out) throw Error("write failed: " + path);
}

}  // namespace stylenlg
