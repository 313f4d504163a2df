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

// Independent reference computations. Nothing here calls into the library
// under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace negprobe::oracle {

struct Ranked {
  std::string word;
  double confidence;
};

// Fraction of the first k ranks whose word is listed in `wrong`.
inline double hit_rate(const std::vector<Ranked>& ranked, const std::vector<std::string>& wrong, int k) {
  int hits = 0;
  for (int i = 0; i < k; ++i) {
    for (const auto& w : wrong) {
      if (ranked[static_cast<std::size_t>(i)].word == w) {
        ++hits;
        break;
      }
    }
  }
  return hits / static_cast<double>(k);
}

// Confidence-weighted version, summed in long double with raw weights.
inline double weighted_hit_rate(const std::vector<Ranked>& ranked, const std::vector<std::string>& wrong,
                                int k) {
  long double num = 0.0L, den = 0.0L;
  for (int i = 0; i < k; ++i) {
    const auto& r = ranked[static_cast<std::size_t>(i)];
    den += r.confidence;
    if (std::find(wrong.begin(), wrong.end(), r.word) != wrong.end()) num += r.confidence;
  }
  return static_cast<double>(num / den);
}

inline long double mean(const std::vector<double>& xs) {
  long double s = 0.0L;
  for (double x : xs) s += x;
  return s / static_cast<long double>(xs.size());
}

// Two-sided permutation test on the difference of means. Returns the
// add-one p estimate (hits + 1) / (resamples + 1).
inline double permutation_p_value(const std::vector<double>& a, const std::vector<double>& b, int resamples,
                                  std::uint64_t seed) {
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  auto diff = [&](const std::vector<double>& xs) {
    long double sa = 0.0L, sb = 0.0L;
    for (std::size_t i = 0; i < a.size(); ++i) sa += xs[i];
    for (std::size_t i = a.size(); i < xs.size(); ++i) sb += xs[i];
    return std::fabs(static_cast<double>(sa / a.size() - sb / b.size()));
  };
  const double observed = diff(pooled);
  std::mt19937_64 gen(seed);
  int extreme = 0;
  for (int r = 0; r < resamples; ++r) {
    std::shuffle(pooled.begin(), pooled.end(), gen);
    if (diff(pooled) >= observed - 1e-12) ++extreme;
  }
  return (extreme + 1.0) / (resamples + 1.0);
}

// Quantile by the "lower" rule: element floor(q * (n - 1)) of the sorted values.
inline double lower_quantile(std::vector<double> xs, double q) {
  std::sort(xs.begin(), xs.end());
  return xs[static_cast<std::size_t>(std::floor(q * static_cast<double>(xs.size() - 1)))];
}

// Random ranked list over a vocabulary of "v0".."v<vocab-1>", distinct
// words, positive non-increasing confidences.
inline std::vector<Ranked> random_ranked(std::mt19937_64& gen, std::size_t length, int vocab) {
  std::vector<int> ids(static_cast<std::size_t>(vocab));
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), gen);
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  std::vector<double> conf(length);
  for (auto& c : conf) c = u(gen);
  std::sort(conf.begin(), conf.end(), std::greater<>());
  std::vector<Ranked> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back({"v" + std::to_string(ids[i]), conf[i]});
  return out;
}

inline std::vector<std::string> random_wrong_set(std::mt19937_64& gen, int vocab, int size) {
  std::vector<std::string> out;
  std::uniform_int_distribution<int> pick(0, vocab - 1);
  while (static_cast<int>(out.size()) < size) {
    std::string w = "v" + std::to_string(pick(gen));
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

}  // namespace negprobe::oracle
