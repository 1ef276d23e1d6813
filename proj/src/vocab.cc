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

#include "stylenlg/vocab.h"

#include <map>
#include <sstream>

#include "stylenlg/corpus.h"
#include "stylenlg/error.h"
#include "stylenlg/tokenizer.h"

namespace stylenlg {

Vocabulary::Vocabulary() {
  Add(std::string(kBos), false);
  Add(std::string(kSep), false);
  Add(std::string(kEos), false);
  Add(std::string(kUnk), false);
}

TokenId Vocabulary::Add(const std::string& token, bool control) {
  auto it = index_.find(token);
  if (it != index_.end()) return it->second;
  const auto id = static_cast<TokenId>(tokens_.size());
  tokens_.push_back(token);
  control_.push_back(control);
  index_.emplace(token, id);
  return id;
}

TokenId Vocabulary::RegisterControl(const std::string& token) {
  if (!IsSpecialToken(token)) throw Error("control token must look like [NAME]: " + token);
  return Add(token, true);
}

TokenId Vocabulary::AddWord(const std::string& token) { return Add(token, false); }

Vocabulary Vocabulary::Build(const std::vector<std::string>& corpus, int min_count,
                             const std::vector<std::string>& controls) {
  Vocabulary vocab;
  for (const auto& c : controls) vocab.RegisterControl(c);
  std::map<std::string, int> counts;
  std::vector<std::string> seen_controls;
  for (const auto& line : corpus) {
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
      if (IsSpecialToken(tok)) {
        if (!vocab.Contains(tok)) seen_controls.push_back(tok);
        continue;
      }
      ++counts[tok];
    }
  }
  for (const auto& c : seen_controls) vocab.RegisterControl(c);
  for (const auto& [tok, n] : counts) {
    if (n >= min_count) vocab.AddWord(tok);
  }
  return vocab;
}

TokenId Vocabulary::Id(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? kUnkId : it->second;
}

bool Vocabulary::Contains(std::string_view token) const {
  return index_.contains(std::string(token));
}

const std::string& Vocabulary::Token(TokenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= tokens_.size())
    throw Error("token id out of range: " + std::to_string(id));
  return tokens_[static_cast<std::size_t>(id)];
}

bool Vocabulary::IsControl(TokenId id) const {
  return id >= 0 && static_cast<std::size_t>(id) < control_.size() &&
         control_[static_cast<std::size_t>(id)];
}

std::vector<TokenId> Vocabulary::Encode(const std::vector<std::string>& tokens) const {
  std::vector<TokenId> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(Id(t));
  return ids;
}

std::vector<TokenId> Vocabulary::EncodeString(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<TokenId> ids;
  std::string tok;
  while (in >> tok) ids.push_back(Id(tok));
  return ids;
}

std::vector<std::string> Vocabulary::Decode(const std::vector<TokenId>& ids) const {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (TokenId id : ids) out.push_back(Token(id));
  return out;
}

Vocabulary Vocabulary::FromTokens(const std::vector<std::string>& tokens,
                                  const std::vector<bool>& control_flags) {
  if (tokens.size() < 4 || tokens[0] != kBos || tokens[1] != kSep || tokens[2] != kEos ||
      tokens[3] != kUnk)
    throw ModelFormatError("vocabulary must start with [BOS] [SEP] [EOS] [UNK]");
  Vocabulary vocab;
  for (std::size_t i = 4; i < tokens.size(); ++i) {
    const bool control = i < control_flags.size() && control_flags[i];
    if (vocab.Contains(tokens[i])) throw ModelFormatError("duplicate token: " + tokens[i]);
    vocab.Add(tokens[i], control);
  }
  return vocab;
}

}  // namespace stylenlg
