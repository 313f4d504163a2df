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

// Builders for the three probing datasets: negated knowledge queries
// (MKR-NQ), synonym/antonym word retrieval (MWR), and synonym/antonym
// recognition pairs (SAR).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "negprobe/corpus.hpp"
#include "negprobe/records.hpp"

namespace negprobe {

enum class QueryKind { MKR_NQ, MWR_Synonym, MWR_Antonym };

std::string_view to_string(QueryKind k);
std::optional<QueryKind> parse_query_kind(std::string_view s);

struct MaskedQuery {
  std::string id;
  std::string text;
  QueryKind kind = QueryKind::MKR_NQ;
  std::string source_word;
  std::optional<PartOfSpeech> pos;     // MWR only
  std::optional<Relation> relation;    // MKR-NQ only
  std::set<std::string> wrong_set;
  // MWR: the acceptable answers. MKR-NQ: the answer of the un-negated query.
  std::set<std::string> gold_set;

  // One mask token and a non-empty wrong set; throws DataError otherwise.
  void validate() const;
};

Json to_json(const MaskedQuery& q);
MaskedQuery query_from_json(const Json& rec);

// Relations whose negated statements are mutually exclusive with the
// original ones. NotDesires records are already negative and get their
// negation removed; all others get one added.
inline constexpr Relation kMkrNqRelations[] = {
    Relation::IsA,    Relation::CapableOf, Relation::PartOf,    Relation::HasA,
    Relation::UsedFor, Relation::MadeOf,   Relation::NotDesires,
};

struct BuildStats {
  std::size_t inputs = 0;
  std::size_t emitted = 0;
  std::map<std::string, std::size_t> drops;

  std::size_t dropped() const;
};

struct MkrNqResult {
  std::vector<MaskedQuery> queries;  // sorted by id
  BuildStats stats;
};

// Throws DataError on an empty record set.
MkrNqResult build_mkr_nq(const std::vector<ClozeRecord>& records,
                         const std::vector<KnowledgeTriple>& triples);

struct MwrTemplate {
  std::string pattern;  // contains X (probed word) and Y (mask slot)
  QueryKind asks = QueryKind::MWR_Synonym;
};

// The six synonym/antonym templates, in pairs.
std::vector<MwrTemplate> default_mwr_templates();
// Template file: JSON records {"template": "X is ... Y", "asks": "Synonym"|"Antonym"}.
std::vector<MwrTemplate> load_mwr_templates(const std::filesystem::path& path);

struct MwrOptions {
  std::int64_t min_count_exclusive = 5;
};

struct MwrResult {
  std::vector<MaskedQuery> queries;  // sorted by id
  BuildStats stats;
  // Words listed as both synonym and antonym of some probed word;
  // removed from both answer sets.
  std::map<std::string, std::set<std::string>> conflicts;
};

// Throws DataError on an empty template list.
MwrResult build_mwr(const std::vector<TokenFrequency>& freqs,
                    const std::vector<KnowledgeTriple>& triples,
                    const std::vector<MwrTemplate>& templates, const MwrOptions& options = {});

enum class SarLabel { Synonym, Antonym };
enum class Split { Train, Dev, Test };

std::string_view to_string(SarLabel l);
std::string_view to_string(Split s);

struct SarPair {
  std::string word_a;  // word_a < word_b
  std::string word_b;
  SarLabel label = SarLabel::Synonym;
  Split split = Split::Train;

  bool operator==(const SarPair&) const = default;
};

Json to_json(const SarPair& p);

struct SarSizes {
  std::size_t train = 33000;
  std::size_t dev = 1000;
  std::size_t test = 2000;
};

// Each split of size n holds n/2 antonym pairs (rounded down) and the rest
// synonym pairs. Pairs listed under both labels are discarded. Throws
// DataError naming the shortfall when the pool is too small.
std::vector<SarPair> build_sar(const std::vector<KnowledgeTriple>& triples, const SarSizes& sizes,
                               std::uint64_t seed);

}  // namespace negprobe
