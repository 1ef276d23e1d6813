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

#ifndef STYLENLG_TOKENIZER_H_
#define STYLENLG_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace stylenlg {

// Corpus-wide tokenizer. Splits on whitespace and then detaches leading and
// trailing punctuation (. , ! ? : ;) as separate tokens. Placeholders
// ($slotN) and bracketed special tokens ([BOS], [LENGTH_SHORT], ...) survive
// intact because the punctuation set does not touch their characters.
std::vector<std::string> Tokenize(std::string_view text);

std::string JoinTokens(const std::vector<std::string>& tokens);

bool IsPunctuationChar(char c);
bool IsPunctuationToken(std::string_view token);

// True for "$slot<positive integer>".
bool IsPlaceholder(std::string_view token);
// Index N of "$slotN"; 0 if not a placeholder.
int PlaceholderIndex(std::string_view token);
std::string MakePlaceholder(int index);

// True for "[" upper-case/underscore/digit "]".
bool IsSpecialToken(std::string_view token);

std::string ToLower(std::string_view text);

// Collapses runs of whitespace to single spaces and trims both ends.
std::string NormalizeWhitespace(std::string_view text);

}  // namespace stylenlg

#endif  // STYLENLG_TOKENIZER_H_
