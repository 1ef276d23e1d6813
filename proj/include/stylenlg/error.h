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

#ifndef STYLENLG_ERROR_H_
#define STYLENLG_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stylenlg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DelexicalizationError : public Error {
 public:
  explicit DelexicalizationError(std::string missing_value)
      : Error("slot value not found in utterance: \"" + missing_value + "\""),
        missing_value_(std::move(missing_value)) {}
  const std::string& missing_value() const { return missing_value_; }

 private:
  std::string missing_value_;
};

class LexicalizationError : public Error {
 public:
  explicit LexicalizationError(std::vector<std::string> missing_keys)
      : Error(BuildMessage(missing_keys)), missing_keys_(std::move(missing_keys)) {}
  const std::vector<std::string>& missing_keys() const { return missing_keys_; }

 private:
  static std::string BuildMessage(const std::vector<std::string>& keys) {
    std::string msg = "no value for placeholder(s):";
    for (const auto& k : keys) msg += " " + k;
    return msg;
  }
  std::vector<std::string> missing_keys_;
};

class ModelFormatError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace stylenlg

#endif  // STYLENLG_ERROR_H_
