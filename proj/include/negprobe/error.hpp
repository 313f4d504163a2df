// Copyright 2026 The negprobe Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace negprobe {

// Malformed or inconsistent input data. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad invocation (flags, argument values). The CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No rule in the negation table applies to the record's verb.
class QueryNotNegatable : public DataError {
 public:
  using DataError::DataError;
};

// A prediction list is shorter than the requested cutoff k.
class InsufficientPredictions : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace negprobe
