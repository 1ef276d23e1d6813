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

#ifndef STYLENLG_VOCAB_H_
#define STYLENLG_VOCAB_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stylenlg {

using TokenId = std::int32_t;

// Token <-> id bijection. Ids 0..3 are [BOS], [SEP], [EOS], [UNK]; control
// tokens follow in registration order, then ordinary words.
class Vocabulary {
 public:
  static constexpr TokenId kBosId = 0;
  static constexpr TokenId kSepId = 1;
  static constexpr TokenId kEosId = 2;
  static constexpr TokenId kUnkId = 3;

  Vocabulary();

  // Keeps tokens seen at least min_count times across the whitespace
  // tokenized strings. Bracketed special tokens found in the corpus are
  // registered as controls regardless of count. Words are added in
  // lexicographic order so ids do not depend on corpus order.
  static Vocabulary Build(const std::vector<std::string>& corpus, int min_count,
                          const std::vector<std::string>& controls = {});

  // Adds a control token; returns its id (existing id if already present).
  TokenId RegisterControl(const std::string& token);
  TokenId AddWord(const std::string& token);

  TokenId Id(std::string_view token) const;  // [UNK] id for unknown tokens
  bool Contains(std::string_view token) const;
  const std::string& Token(TokenId id) const;
  std::size_t size() const { return tokens_.size(); }
  bool IsControl(TokenId id) const;
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::vector<TokenId> Encode(const std::vector<std::string>& tokens) const;
  // Whitespace split (input is expected to be tokenized already).
  std::vector<TokenId> EncodeString(std::string_view text) const;
  std::vector<std::string> Decode(const std::vector<TokenId>& ids) const;

  // Rebuilds a vocabulary from a stored token list (model files).
  static Vocabulary FromTokens(const std::vector<std::string>& tokens,
                               const std::vector<bool>& control_flags);

 private:
  TokenId Add(const std::string& token, bool control);

  std::vector<std::string> tokens_;
  std::vector<bool> control_;
  std::unordered_map<std::string, TokenId> index_;
};

}  // namespace stylenlg

#endif  // STYLENLG_VOCAB_H_
