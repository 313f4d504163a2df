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

#include "negprobe/harness.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <set>
#include <unordered_set>

#include "negprobe/checksum.hpp"
#include "negprobe/error.hpp"
#include "negprobe/text.hpp"

namespace negprobe {
namespace {

// Words no probing dataset is expected to contain as answers.
constexpr std::string_view kFiller[] = {
    "thing",   "something", "anything", "nothing", "everything", "someone",  "anyone",
    "it",      "this",      "that",     "one",     "none",       "other",    "another",
    "here",    "there",     "then",     "now",     "also",       "just",     "very",
    "what",    "which",     "who",      "whom",    "whose",      "where",    "when",
    "why",     "how",       "each",     "every",   "either",     "neither",  "such",
    "same",    "own",       "much",     "many",    "more",       "most",     "few",
    "less",    "least",     "all",      "both",    "some",       "any",      "enough",
};

std::string iso_utc(std::chrono::system_clock::time_point t) {
  std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

PredictionList ranked_list(const std::string& id, std::vector<std::string> words, int k) {
  std::vector<std::string> ranked;
  std::unordered_set<std::string> used;
  for (auto& w : words) {
    std::string n = normalize_word(w);
    if (n.empty() || used.count(n)) continue;
    used.insert(n);
    ranked.push_back(std::move(n));
    if (ranked.size() == static_cast<std::size_t>(k)) break;
  }
  for (std::size_t f = 0; ranked.size() < static_cast<std::size_t>(k); ++f) {
    std::string filler = f < std::size(kFiller) ? std::string(kFiller[f])
                                                : "filler" + std::to_string(f);
    if (used.insert(filler).second) ranked.push_back(std::move(filler));
  }
  std::vector<double> confidences = geometric_confidences(k);
  std::vector<Prediction> items;
  for (int i = 0; i < k; ++i) items.push_back({ranked[static_cast<std::size_t>(i)], confidences[static_cast<std::size_t>(i)]});
  return PredictionList(id, std::move(items));
}

}  // namespace

std::vector<MaskedQuery> read_query_batch(const std::filesystem::path& path) {
  std::vector<MaskedQuery> out;
  std::set<std::string> ids;
  for_each_line(path, [&](std::size_t line_number, std::string_view line) {
    Json rec = parse_record(line, path, line_number);
    MaskedQuery q;
    try {
      q = query_from_json(rec);
    } catch (const DataError& e) {
      throw DataError(path.string() + ":" + std::to_string(line_number) + ": " + e.what());
    }
    if (!ids.insert(q.id).second) {
      throw DataError(path.string() + ":" + std::to_string(line_number) + ": duplicate query id " + q.id);
    }
    out.push_back(std::move(q));
  });
  return out;
}

std::string serialize_query_batch(const std::vector<MaskedQuery>& queries) {
  std::string out;
  for (const auto& q : queries) out += dump_record(to_json(q)) + "\n";
  return out;
}

std::vector<PredictionList> read_prediction_batch(const std::filesystem::path& path) {
  std::vector<PredictionList> out;
  std::set<std::string> ids;
  for_each_line(path, [&](std::size_t line_number, std::string_view line) {
    Json rec = parse_record(line, path, line_number);
    try {
      out.push_back(prediction_from_json(rec));
    } catch (const DataError& e) {
      throw DataError(path.string() + ":" + std::to_string(line_number) + ": " + e.what());
    }
    if (!ids.insert(out.back().query_id()).second) {
      throw DataError(path.string() + ":" + std::to_string(line_number) +
                      ": duplicate prediction record for " + out.back().query_id());
    }
  });
  return out;
}

std::string serialize_prediction_batch(const std::vector<PredictionList>& preds) {
  std::string out;
  for (const auto& p : preds) out += dump_record(to_json(p)) + "\n";
  return out;
}

AnswerTable read_answer_table(const std::filesystem::path& path) {
  AnswerTable table;
  for_each_line(path, [&](std::size_t line_number, std::string_view line) {
    Json rec = parse_record(line, path, line_number);
    std::string id = require_string(rec, "query_id");
    auto it = rec.find("answers");
    if (it == rec.end() || !it->is_array()) {
      throw DataError(path.string() + ":" + std::to_string(line_number) + ": answers must be a list");
    }
    std::vector<std::string> answers;
    for (const auto& a : *it) {
      if (!a.is_string()) throw DataError(path.string() + ": answers must be strings");
      answers.push_back(a.get<std::string>());
    }
    table[id] = std::move(answers);
  });
  return table;
}

AnswerTable answer_table_from(const std::vector<MaskedQuery>& queries, AnswerSource source) {
  AnswerTable table;
  for (const auto& q : queries) {
    const auto& words = source == AnswerSource::WrongSet ? q.wrong_set : q.gold_set;
    table[q.id] = std::vector<std::string>(words.begin(), words.end());
  }
  return table;
}

std::vector<double> geometric_confidences(int k) {
  if (k < 1) throw UsageError("k must be at least 1");
  // Weights 2^(k-1), ..., 2, 1 over 2^k - 1.
  std::vector<double> out;
  const double total = std::ldexp(1.0, k) - 1.0;
  for (int i = 0; i < k; ++i) out.push_back(std::ldexp(1.0, k - 1 - i) / total);
  return out;
}

std::vector<PredictionList> mock_lookup_model(const std::vector<MaskedQuery>& queries,
                                              const AnswerTable& answers, int k,
                                              const std::optional<std::string>& fallback) {
  std::vector<PredictionList> out;
  out.reserve(queries.size());
  for (const auto& q : queries) {
    auto it = answers.find(q.id);
    std::vector<std::string> words;
    if (it != answers.end()) {
      words = it->second;
    } else if (fallback) {
      words = {*fallback};
    } else {
      throw DataError("answer table has no entry for query " + q.id + " and no fallback is set");
    }
    out.push_back(ranked_list(q.id, std::move(words), k));
  }
  return out;
}

std::vector<PredictionList> mock_echo_model(const std::vector<MaskedQuery>& queries, int k) {
  std::vector<PredictionList> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.push_back(ranked_list(q.id, {q.source_word}, k));
  return out;
}

RunManifest::RunManifest(std::string command, std::vector<std::string> argv)
    : command_(std::move(command)), argv_(std::move(argv)), started_(std::chrono::system_clock::now()) {}

void RunManifest::add_input(const std::filesystem::path& path) {
  if (std::filesystem::is_regular_file(path)) inputs_[path.string()] = sha256_file(path);
}

void RunManifest::add_output(const std::filesystem::path& path) {
  outputs_[path.string()] = sha256_file(path);
}

Json RunManifest::to_json() const {
  Json rec{
      {"command", command_},
      {"argv", argv_},
      {"tool_version", kToolVersion},
      {"seed", seed_ ? Json(*seed_) : Json(nullptr)},
      {"started_at", iso_utc(started_)},
      {"finished_at", iso_utc(std::chrono::system_clock::now())},
      {"inputs", inputs_},
      {"outputs", outputs_},
  };
  for (const auto& [key, value] : extra_.items()) rec[key] = value;
  return rec;
}

void RunManifest::write(const std::filesystem::path& path) const {
  write_file_atomic(path, to_json().dump(2) + "\n");
}

}  // namespace negprobe
