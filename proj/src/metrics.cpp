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

#include "negprobe/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "negprobe/error.hpp"
#include "negprobe/text.hpp"

namespace negprobe {
namespace {

std::set<std::string> normalize_all(const std::set<std::string>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(normalize_word(w));
  return out;
}

void check_cutoff(const PredictionList& pred, int k) {
  if (k < 1) throw UsageError("k must be at least 1");
  if (pred.size() < static_cast<std::size_t>(k)) {
    throw InsufficientPredictions("query " + pred.query_id() + " has " +
                                  std::to_string(pred.size()) + " predictions, need " +
                                  std::to_string(k));
  }
}

double mean_x100(std::vector<double>& values) {
  if (values.empty()) return 0.0;
  return 100.0 * pairwise_sum(values) / static_cast<double>(values.size());
}

bool is_mwr(QueryKind k) { return k == QueryKind::MWR_Synonym || k == QueryKind::MWR_Antonym; }

std::unordered_map<std::string, const PredictionList*> index_predictions(
    const std::vector<MaskedQuery>& dataset, const std::vector<PredictionList>& preds) {
  std::unordered_map<std::string, const PredictionList*> by_id;
  for (const auto& p : preds) {
    if (!by_id.emplace(p.query_id(), &p).second) {
      throw DataError("more than one prediction list for query " + p.query_id());
    }
  }
  std::vector<std::string> missing;
  for (const auto& q : dataset) {
    if (!by_id.count(q.id)) missing.push_back(q.id);
  }
  if (!missing.empty()) {
    std::size_t shown = std::min<std::size_t>(missing.size(), 20);
    std::string list = join(std::vector<std::string>(missing.begin(), missing.begin() + shown), ", ");
    if (shown < missing.size()) list += ", ...";
    throw DataError("no predictions for " + std::to_string(missing.size()) + " queries: " + list);
  }
  return by_id;
}

double percent(std::size_t hits, std::size_t total) {
  return 100.0 * static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace

PredictionList::PredictionList(std::string query_id, std::vector<Prediction> items)
    : query_id_(std::move(query_id)), items_(std::move(items)) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    Prediction& p = items_[i];
    p.word = normalize_word(p.word);
    if (!std::isfinite(p.confidence) || p.confidence <= 0.0) {
      throw DataError("query " + query_id_ + ": confidence must be positive at rank " +
                      std::to_string(i + 1));
    }
    if (i > 0 && p.confidence > items_[i - 1].confidence) {
      throw DataError("query " + query_id_ + ": confidences increase at rank " +
                      std::to_string(i + 1));
    }
    if (!seen.insert(p.word).second) {
      throw DataError("query " + query_id_ + ": duplicate predicted word '" + p.word + "'");
    }
  }
}

Json to_json(const PredictionList& p) {
  Json items = Json::array();
  for (const auto& item : p.items()) {
    items.push_back(Json{{"word", item.word}, {"confidence", item.confidence}});
  }
  return Json{{"query_id", p.query_id()}, {"items", std::move(items)}};
}

PredictionList prediction_from_json(const Json& rec) {
  std::string id = require_string(rec, "query_id");
  auto it = rec.find("items");
  if (it == rec.end()) it = rec.find("predictions");
  if (it == rec.end() || !it->is_array()) {
    throw DataError("prediction record " + id + " has no items list");
  }
  std::vector<Prediction> items;
  for (const auto& entry : *it) {
    Prediction p;
    if (entry.is_object()) {
      p.word = require_string(entry, "word");
      auto c = entry.find("confidence");
      if (c == entry.end() || !c->is_number()) {
        throw DataError("prediction record " + id + ": item without numeric confidence");
      }
      p.confidence = c->get<double>();
    } else if (entry.is_array() && entry.size() == 2 && entry[0].is_string() &&
               entry[1].is_number()) {
      p.word = entry[0].get<std::string>();
      p.confidence = entry[1].get<double>();
    } else {
      throw DataError("prediction record " + id + ": malformed item");
    }
    items.push_back(std::move(p));
  }
  return PredictionList(std::move(id), std::move(items));
}

double hr_at_k(const PredictionList& pred, const std::set<std::string>& wrong, int k) {
  check_cutoff(pred, k);
  const std::set<std::string> targets = normalize_all(wrong);
  int hits = 0;
  for (int i = 0; i < k; ++i) {
    if (targets.count(pred.items()[static_cast<std::size_t>(i)].word)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

double whr_at_k(const PredictionList& pred, const std::set<std::string>& wrong, int k) {
  check_cutoff(pred, k);
  const std::set<std::string> targets = normalize_all(wrong);
  // Weights are taken relative to the top confidence. The ratio is
  // unchanged by rescaling, and equal confidences become exact 1.0 weights
  // so the result coincides bit-for-bit with hr_at_k.
  const double top = pred.items().front().confidence;
  double hit_weight = 0.0;
  double total_weight = 0.0;
  for (int i = 0; i < k; ++i) {
    const Prediction& p = pred.items()[static_cast<std::size_t>(i)];
    double w = p.confidence / top;
    total_weight += w;
    if (targets.count(p.word)) hit_weight += w;
  }
  return hit_weight / total_weight;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Json to_json(const MetricReport& r) {
  Json per_k = Json::array();
  for (const auto& m : r.per_k) {
    per_k.push_back(Json{{"k", m.k},
                         {"hr", m.hr},
                         {"whr", m.whr},
                         {"scored", m.scored},
                         {"skipped", m.skipped}});
  }
  Json rec{{"queries", r.queries}, {"per_k", std::move(per_k)}};
  if (r.regeneration) {
    const auto& g = *r.regeneration;
    rec["regeneration"] = Json{
        {"r_syn", g.r_syn ? Json(*g.r_syn) : Json(nullptr)},
        {"r_ant", g.r_ant ? Json(*g.r_ant) : Json(nullptr)},
        {"synonym_queries", g.synonym_queries},
        {"antonym_queries", g.antonym_queries},
    };
  }
  if (!r.pos_hr1.empty()) rec["pos_hr1"] = r.pos_hr1;
  return rec;
}

MetricReport aggregate(const std::vector<MaskedQuery>& dataset,
                       const std::vector<PredictionList>& preds, const std::vector<int>& ks,
                       const AggregateOptions& options) {
  if (ks.empty()) throw UsageError("aggregate: no cutoffs given");
  for (int k : ks) {
    if (k < 1) throw UsageError("aggregate: cutoffs must be positive");
  }
  auto by_id = index_predictions(dataset, preds);

  MetricReport report;
  report.queries = dataset.size();
  for (int k : ks) {
    KMetrics m;
    m.k = k;
    std::vector<double> hr, whr;
    hr.reserve(dataset.size());
    whr.reserve(dataset.size());
    for (const auto& q : dataset) {
      const PredictionList& p = *by_id.at(q.id);
      if (p.size() < static_cast<std::size_t>(k) && options.lenient) {
        ++m.skipped;
        continue;
      }
      hr.push_back(hr_at_k(p, q.wrong_set, k));
      whr.push_back(whr_at_k(p, q.wrong_set, k));
    }
    m.scored = hr.size();
    m.hr = mean_x100(hr);
    m.whr = mean_x100(whr);
    report.per_k.push_back(m);
  }

  bool all_mwr = !dataset.empty() && std::all_of(dataset.begin(), dataset.end(), [](const auto& q) {
    return is_mwr(q.kind);
  });
  if (all_mwr) {
    report.regeneration = regeneration_ratio(dataset, preds);
    bool has_pos = std::all_of(dataset.begin(), dataset.end(),
                               [](const auto& q) { return q.pos.has_value(); });
    bool has_top1 = std::all_of(dataset.begin(), dataset.end(),
                                [&](const auto& q) { return by_id.at(q.id)->size() >= 1; });
    if (has_pos && has_top1) report.pos_hr1 = pos_breakdown(dataset, preds);
  }
  return report;
}

RegenerationRatios regeneration_ratio(const std::vector<MaskedQuery>& dataset,
                                      const std::vector<PredictionList>& preds) {
  auto by_id = index_predictions(dataset, preds);
  RegenerationRatios out;
  std::size_t syn_hits = 0, ant_hits = 0;
  for (const auto& q : dataset) {
    if (!is_mwr(q.kind)) {
      throw DataError("regeneration ratio needs MWR queries; " + q.id + " is " +
                      std::string(to_string(q.kind)));
    }
    const PredictionList& p = *by_id.at(q.id);
    bool echoed = p.size() > 0 && p.items().front().word == normalize_word(q.source_word);
    if (q.kind == QueryKind::MWR_Synonym) {
      ++out.synonym_queries;
      syn_hits += echoed;
    } else {
      ++out.antonym_queries;
      ant_hits += echoed;
    }
  }
  if (out.synonym_queries > 0) out.r_syn = percent(syn_hits, out.synonym_queries);
  if (out.antonym_queries > 0) out.r_ant = percent(ant_hits, out.antonym_queries);
  return out;
}

std::map<std::string, double> pos_breakdown(const std::vector<MaskedQuery>& dataset,
                                            const std::vector<PredictionList>& preds) {
  auto by_id = index_predictions(dataset, preds);
  std::map<std::string, std::vector<double>> parts;
  for (const auto& q : dataset) {
    if (!q.pos) throw DataError("query " + q.id + " has no part of speech");
    parts[std::string(to_string(*q.pos))].push_back(hr_at_k(*by_id.at(q.id), q.wrong_set, 1));
  }
  std::map<std::string, double> out;
  for (auto& [pos, values] : parts) out[pos] = mean_x100(values);
  return out;
}

double accuracy(const std::vector<std::string>& predicted, const std::vector<std::string>& gold) {
  if (predicted.size() != gold.size()) {
    throw UsageError("accuracy: " + std::to_string(predicted.size()) + " predictions for " +
                     std::to_string(gold.size()) + " gold labels");
  }
  if (gold.empty()) throw UsageError("accuracy: empty label lists");
  std::size_t same = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) same += predicted[i] == gold[i];
  return static_cast<double>(same) / static_cast<double>(gold.size());
}

WelchResult welch_t_test(std::span<const double> runs_a, std::span<const double> runs_b) {
  if (runs_a.size() < 2 || runs_b.size() < 2) {
    throw UsageError("welch_t_test: each sample needs at least two values");
  }
  auto moments = [](std::span<const double> xs) {
    double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::make_pair(mean, ss / static_cast<double>(xs.size() - 1));
  };
  auto [mean_a, var_a] = moments(runs_a);
  auto [mean_b, var_b] = moments(runs_b);
  const double na = static_cast<double>(runs_a.size());
  const double nb = static_cast<double>(runs_b.size());

  WelchResult r;
  if (var_a == 0.0 && var_b == 0.0) {
    if (mean_a == mean_b) {
      r.p = 1.0;
      r.warning = "both samples are constant and equal";
    } else {
      r.t = mean_a > mean_b ? HUGE_VAL : -HUGE_VAL;
      r.p = 0.0;
      r.significant = true;
      r.warning = "both samples are constant with different means";
    }
    return r;
  }

  const double sa = var_a / na;
  const double sb = var_b / nb;
  r.t = (mean_a - mean_b) / std::sqrt(sa + sb);
  r.df = (sa + sb) * (sa + sb) / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
  boost::math::students_t dist(r.df);
  r.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t))));
  r.significant = r.p < 0.05;
  return r;
}

std::string format_report_table(const MetricReport& report, const std::string& row_label) {
  std::vector<std::string> headers{"Model"};
  std::vector<std::string> cells{row_label};
  auto fmt = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << v;
    return s.str();
  };
  for (const auto& m : report.per_k) {
    headers.push_back("HR@" + std::to_string(m.k));
    cells.push_back(fmt(m.hr));
    if (m.k > 1) {
      headers.push_back("WHR@" + std::to_string(m.k));
      cells.push_back(fmt(m.whr));
    }
  }
  std::ostringstream out;
  for (int row = 0; row < 2; ++row) {
    const auto& values = row == 0 ? headers : cells;
    for (std::size_t c = 0; c < values.size(); ++c) {
      std::size_t width = std::max(headers[c].size(), cells[c].size());
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(width)) << values[c];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(width)) << values[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace negprobe
