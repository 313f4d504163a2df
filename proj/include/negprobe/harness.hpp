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

// File protocol shared by the CLI, external model adapters, and tests:
// query batches, prediction batches, run manifests, and deterministic
// mock models.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negprobe/metrics.hpp"
#include "negprobe/probegen.hpp"
#include "negprobe/records.hpp"

namespace negprobe {

inline constexpr std::string_view kToolVersion = "0.3.0";

// Query batch: one MaskedQuery record per line; ids must be unique.
std::vector<MaskedQuery> read_query_batch(const std::filesystem::path& path);
std::string serialize_query_batch(const std::vector<MaskedQuery>& queries);

// Prediction batch: {"query_id": ..., "items": [{"word": ..., "confidence": ...}, ...]}
// per line; one record per query id.
std::vector<PredictionList> read_prediction_batch(const std::filesystem::path& path);
std::string serialize_prediction_batch(const std::vector<PredictionList>& preds);

// Answer table for the lookup mock: {"query_id": ..., "answers": [...]} per line.
using AnswerTable = std::map<std::string, std::vector<std::string>>;
AnswerTable read_answer_table(const std::filesystem::path& path);

// Builds a table from each query's own sets: the sorted wrong set, or the
// sorted gold set.
enum class AnswerSource { WrongSet, GoldSet };
AnswerTable answer_table_from(const std::vector<MaskedQuery>& queries, AnswerSource source);

// Confidences decaying by half per rank, normalized over k items:
// k = 3 gives (4/7, 2/7, 1/7).
std::vector<double> geometric_confidences(int k);

// Top-k lists from the table, padded from a fixed filler vocabulary.
// Ids missing from the table fall back to `fallback` when given, else
// DataError.
std::vector<PredictionList> mock_lookup_model(const std::vector<MaskedQuery>& queries,
                                              const AnswerTable& answers, int k,
                                              const std::optional<std::string>& fallback = {});

// Top-1 is always the query's source word; the rest is filler.
std::vector<PredictionList> mock_echo_model(const std::vector<MaskedQuery>& queries, int k = 5);

// Provenance record written next to every CLI output.
class RunManifest {
 public:
  RunManifest(std::string command, std::vector<std::string> argv);

  void add_input(const std::filesystem::path& path);
  void add_output(const std::filesystem::path& path);
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set(const std::string& key, Json value) { extra_[key] = std::move(value); }

  Json to_json() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::string command_;
  std::vector<std::string> argv_;
  std::optional<std::uint64_t> seed_;
  std::map<std::string, std::string> inputs_;
  std::map<std::string, std::string> outputs_;
  Json extra_ = Json::object();
  std::chrono::system_clock::time_point started_;
};

}  // namespace negprobe
