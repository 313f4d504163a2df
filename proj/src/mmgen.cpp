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

#include "negprobe/mmgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <span>

#include "negprobe/error.hpp"
#include "negprobe/text.hpp"

namespace negprobe {
namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string_view to_string(MatchLabel l) { return l == MatchLabel::Match ? "Match" : "Mismatch"; }

Json to_json(const MeaningMatchExample& e) {
  return Json{{"word", e.word},
              {"definition", e.definition},
              {"label", std::string(to_string(e.label))},
              {"origin_word", e.origin_word}};
}

void MmDatasetSpec::validate() const {
  if (k < 1) throw UsageError("k must be at least 1");
  if (!(validation_fraction >= 0.0 && validation_fraction < 1.0)) {
    throw UsageError("validation fraction must lie in [0, 1)");
  }
}

std::string crude_stem(std::string_view word) {
  static constexpr std::string_view kSuffixes[] = {
      "ations", "ation", "ness", "ment", "ings", "ing", "ies", "ied", "ers",
      "er",     "ed",    "ly",   "es",   "s",
  };
  std::string w(word);
  for (std::string_view suffix : kSuffixes) {
    if (w.size() > suffix.size() + 2 && ends_with(w, suffix)) {
      return w.substr(0, w.size() - suffix.size());
    }
  }
  return w;
}

std::vector<MeaningMatchExample> sample_negatives(const std::string& word,
                                                  const std::vector<DefinitionRecord>& pool,
                                                  int k, Rng& rng, bool exclude_same_stem) {
  if (k < 1) throw UsageError("k must be at least 1");
  auto self = std::find_if(pool.begin(), pool.end(),
                           [&](const DefinitionRecord& d) { return d.word == word; });
  if (self == pool.end()) throw DataError("word '" + word + "' is not in the definition pool");

  const std::string stem = exclude_same_stem ? crude_stem(word) : std::string();
  std::vector<const DefinitionRecord*> others;
  others.reserve(pool.size());
  for (const auto& d : pool) {
    if (d.word == word || d.definition == self->definition) continue;
    if (exclude_same_stem && crude_stem(d.word) == stem) continue;
    others.push_back(&d);
  }
  if (others.size() < static_cast<std::size_t>(k)) {
    throw DataError("negative pool for '" + word + "' has " + std::to_string(others.size()) +
                    " candidates, need " + std::to_string(k));
  }

  // Partial Fisher-Yates: the first k slots become a uniform k-subset.
  std::vector<MeaningMatchExample> out;
  out.reserve(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(others.size() - i));
    std::swap(others[i], others[j]);
    out.push_back({word, others[i]->definition, MatchLabel::Mismatch, others[i]->word});
  }
  return out;
}

namespace {

// Shuffles each label class, then alternates Match/Mismatch so any window
// of the epoch is balanced to within one example.
void interleave_labels(std::vector<MeaningMatchExample>& examples, Rng& rng) {
  std::vector<MeaningMatchExample> match, mismatch;
  for (auto& e : examples) (e.label == MatchLabel::Match ? match : mismatch).push_back(std::move(e));
  rng.shuffle(std::span(match));
  rng.shuffle(std::span(mismatch));
  examples.clear();
  std::size_t n = std::max(match.size(), mismatch.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < match.size()) examples.push_back(std::move(match[i]));
    if (i < mismatch.size()) examples.push_back(std::move(mismatch[i]));
  }
}

}  // namespace

MmDataset build_mm_dataset(const std::vector<DefinitionRecord>& defs, const MmDatasetSpec& spec) {
  spec.validate();
  if (defs.empty()) throw DataError("build_mm_dataset: no definitions");

  std::vector<DefinitionRecord> pool = defs;
  std::sort(pool.begin(), pool.end(),
            [](const DefinitionRecord& a, const DefinitionRecord& b) { return a.word < b.word; });
  for (std::size_t i = 1; i < pool.size(); ++i) {
    if (pool[i].word == pool[i - 1].word) {
      throw DataError("duplicate definition record for '" + pool[i].word + "'");
    }
  }

  std::vector<std::string> words;
  for (const auto& d : pool) words.push_back(d.word);

  Rng split_rng(derive_seed(spec.seed, "validation-split"));
  std::vector<std::string> shuffled = words;
  split_rng.shuffle(std::span(shuffled));
  auto n_val = static_cast<std::size_t>(
      std::llround(spec.validation_fraction * static_cast<double>(words.size())));
  std::vector<std::string> val_words(shuffled.begin(), shuffled.begin() + n_val);
  std::sort(val_words.begin(), val_words.end());

  MmDataset out;
  for (const auto& d : pool) {
    Rng rng(derive_seed(spec.seed, d.word));
    std::vector<MeaningMatchExample> examples =
        sample_negatives(d.word, pool, spec.k, rng, spec.exclude_same_stem);
    for (int i = 0; i < spec.k; ++i) {
      examples.push_back({d.word, d.definition, MatchLabel::Match, d.word});
    }
    bool is_val = std::binary_search(val_words.begin(), val_words.end(), d.word);
    auto& target = is_val ? out.validation : out.train;
    target.insert(target.end(), examples.begin(), examples.end());
  }

  Rng order(derive_seed(spec.seed, "order"));
  interleave_labels(out.train, order);
  interleave_labels(out.validation, order);
  out.validation_words = std::move(val_words);
  return out;
}

}  // namespace negprobe
