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

// Hit-rate scoring of ranked model predictions against wrong-answer sets,
// plus the dataset-level analyses built on it.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "negprobe/corpus.hpp"
#include "negprobe/probegen.hpp"
#include "negprobe/records.hpp"

namespace negprobe {

struct Prediction {
  std::string word;
  double confidence = 0.0;
};

// Ranked predictions for one query. Words are stored normalized; the
// constructor enforces positive, non-increasing confidences and distinct
// words. Confidence ties keep the given order.
class PredictionList {
 public:
  PredictionList() = default;
  PredictionList(std::string query_id, std::vector<Prediction> items);

  const std::string& query_id() const { return query_id_; }
  const std::vector<Prediction>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::string query_id_;
  std::vector<Prediction> items_;
};

Json to_json(const PredictionList& p);
PredictionList prediction_from_json(const Json& rec);

// Fraction of the top-k words that fall in `wrong` (after normalization).
// Throws InsufficientPredictions when pred has fewer than k items and
// UsageError when k < 1.
double hr_at_k(const PredictionList& pred, const std::set<std::string>& wrong, int k);

// Confidence-weighted variant of hr_at_k.
double whr_at_k(const PredictionList& pred, const std::set<std::string>& wrong, int k);

// Sum in a fixed pairwise order, independent of thread scheduling.
double pairwise_sum(std::span<const double> values);

struct KMetrics {
  int k = 0;
  double hr = 0.0;   // mean x100
  double whr = 0.0;  // mean x100
  std::size_t scored = 0;
  std::size_t skipped = 0;
};

struct RegenerationRatios {
  std::optional<double> r_syn;  // percent; nullopt when no synonym queries
  std::optional<double> r_ant;
  std::size_t synonym_queries = 0;
  std::size_t antonym_queries = 0;
};

struct MetricReport {
  std::size_t queries = 0;
  std::vector<KMetrics> per_k;
  std::optional<RegenerationRatios> regeneration;  // MWR datasets only
  std::map<std::string, double> pos_hr1;           // MWR with pos, x100
};

Json to_json(const MetricReport& r);

struct AggregateOptions {
  // Skip (and count) queries with fewer than k predictions instead of failing.
  bool lenient = false;
};

// Throws UsageError on empty ks and DataError listing query ids that have
// no prediction list.
MetricReport aggregate(const std::vector<MaskedQuery>& dataset,
                       const std::vector<PredictionList>& preds, const std::vector<int>& ks,
                       const AggregateOptions& options = {});

// Percent of synonym-/antonym-asking queries whose top-1 prediction equals
// the probed word. Throws DataError on non-MWR queries or missing predictions.
RegenerationRatios regeneration_ratio(const std::vector<MaskedQuery>& dataset,
                                      const std::vector<PredictionList>& preds);

// Mean HR@1 x100 per part of speech; empty partitions are absent.
std::map<std::string, double> pos_breakdown(const std::vector<MaskedQuery>& dataset,
                                            const std::vector<PredictionList>& preds);

// Fraction of matching positions. Throws UsageError on empty or unequal lists.
double accuracy(const std::vector<std::string>& predicted, const std::vector<std::string>& gold);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
  bool significant = false;
  std::string warning;  // set for the zero-variance special cases
};

// Two-sided Welch t-test at alpha = 0.05. Each list needs >= 2 values.
WelchResult welch_t_test(std::span<const double> runs_a, std::span<const double> runs_b);

// Aligned text table with the usual columns (HR@k, plus WHR@k for
// k > 1), values x100 with two decimals.
std::string format_report_table(const MetricReport& report, const std::string& row_label);

}  // namespace negprobe
