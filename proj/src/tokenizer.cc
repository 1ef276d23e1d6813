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

#include "stylenlg/tokenizer.h"

#include <cctype>

namespace stylenlg {

bool IsPunctuationChar(char c) {
  switch (c) {
    case '.':
    case ',':
    case '!':
    case '?':
    case ':':
    case ';':
      return true;
    default:
      return false;
  }
}

bool IsPunctuationToken(std::string_view token) {
  return token.size() == 1 && IsPunctuationChar(token[0]);
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    std::string_view word = text.substr(i, j - i);
    i = j;

    std::size_t lead = 0;
    while (lead < word.size() && IsPunctuationChar(word[lead])) ++lead;
    std::size_t trail = word.size();
    while (trail > lead && IsPunctuationChar(word[trail - 1])) --trail;

    for (std::size_t k = 0; k < lead; ++k) out.emplace_back(1, word[k]);
    if (trail > lead) out.emplace_back(word.substr(lead, trail - lead));
    for (std::size_t k = trail; k < word.size(); ++k) out.emplace_back(1, word[k]);
  }
  return out;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

int PlaceholderIndex(std::string_view token) {
  constexpr std::string_view kPrefix = "$slot";
  if (token.size() <= kPrefix.size() || token.substr(0, kPrefix.size()) != kPrefix)
    return 0;
  std::string_view digits = token.substr(kPrefix.size());
  if (digits[0] == '0') return 0;
  int value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return 0;
    if (value > 100000000) return 0;
    value = value * 10 + (c - '0');
  }
  return value;
}

bool IsPlaceholder(std::string_view token) { return PlaceholderIndex(token) > 0; }

std::string MakePlaceholder(int index) { return "$slot" + std::to_string(index); }

bool IsSpecialToken(std::string_view token) {
  if (token.size() < 3 || token.front() != '[' || token.back() != ']') return false;
  for (std::size_t i = 1; i + 1 < token.size(); ++i) {
    const char c = token[i];
    if (!(std::isupper(static_cast<unsigned char>(c)) || c == '_' ||
          std::isdigit(static_cast<unsigned char>(c))))
      return false;
  }
  return true;
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out += c;
    }
  }
  return out;
}

}  // namespace stylenlg
