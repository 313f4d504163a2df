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

// Meaning-matching corpus: (word, definition) pairs labelled Match or
// Mismatch, with k sampled foreign definitions per word and the true pair
// repeated k times so every word contributes equally to both labels.

#include <cstdint>
#include <string>
#include <vector>

#include "negprobe/corpus.hpp"
#include "negprobe/records.hpp"
#include "negprobe/rng.hpp"

namespace negprobe {

enum class MatchLabel { Match, Mismatch };

std::string_view to_string(MatchLabel l);

struct MeaningMatchExample {
  std::string word;
  std::string definition;
  MatchLabel label = MatchLabel::Match;
  std::string origin_word;  // word whose definition was used

  bool operator==(const MeaningMatchExample&) const = default;
};

Json to_json(const MeaningMatchExample& e);

struct MmDatasetSpec {
  int k = 10;
  double validation_fraction = 0.05;
  std::uint64_t seed = 0;
  // Skip negatives whose word shares a crude suffix-stripped stem with the
  // probed word. Off by default.
  bool exclude_same_stem = false;

  // Throws UsageError unless k >= 1 and 0 <= validation_fraction < 1.
  void validate() const;
};

// Crude suffix-stripping stem used by the optional same-stem filter.
std::string crude_stem(std::string_view word);

// k Mismatch examples whose origins are drawn uniformly without replacement
// from pool minus `word` (and minus words with an identical definition).
// Throws DataError when `word` is absent or fewer than k origins remain.
std::vector<MeaningMatchExample> sample_negatives(const std::string& word,
                                                  const std::vector<DefinitionRecord>& pool,
                                                  int k, Rng& rng,
                                                  bool exclude_same_stem = false);

struct MmDataset {
  std::vector<MeaningMatchExample> train;
  std::vector<MeaningMatchExample> validation;
  std::vector<std::string> validation_words;  // sorted
};

// Validation holds round(fraction * |words|) whole words. Each word's
// negatives come from a generator seeded with derive_seed(seed, word), so
// results do not depend on processing order.
MmDataset build_mm_dataset(const std::vector<DefinitionRecord>& defs, const MmDatasetSpec& spec);

}  // namespace negprobe
