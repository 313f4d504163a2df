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

// Canonical data model for the lexical resources consumed by the dataset
// builders, and the loaders that ingest them.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "negprobe/records.hpp"

namespace negprobe {

enum class Relation {
  IsA,
  CapableOf,
  PartOf,
  HasA,
  UsedFor,
  MadeOf,
  NotDesires,
  Synonym,
  Antonym,
};

inline constexpr Relation kAllRelations[] = {
    Relation::IsA,     Relation::CapableOf, Relation::PartOf,
    Relation::HasA,    Relation::UsedFor,   Relation::MadeOf,
    Relation::NotDesires, Relation::Synonym, Relation::Antonym,
};

std::string_view to_string(Relation r);
// Accepts the bare name ("IsA") or a ConceptNet URI ("/r/IsA").
std::optional<Relation> parse_relation(std::string_view s);

struct KnowledgeTriple {
  std::string head;
  Relation relation;
  std::string tail;

  auto operator<=>(const KnowledgeTriple&) const = default;
};

// Character range [start, end) in the owning text, stored as byte offsets.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

struct ClozeRecord {
  std::string id;  // optional in input; empty when absent
  std::string text;
  std::string answer;
  std::string head;
  Relation relation = Relation::IsA;
  Span verb_span;
  std::string verb_pos;    // Penn tag: VB, VBP, VBZ, VBD, MD
  std::string verb_lemma;  // optional; inferred when empty

  // Throws DataError unless the text has exactly one mask token and the
  // verb span is a non-empty range inside the text that avoids the mask.
  void validate() const;
  std::string_view verb_text() const;
};

struct DefinitionRecord {
  std::string word;
  std::string definition;
  std::set<std::string> sources;

  bool operator==(const DefinitionRecord&) const = default;
};

enum class PartOfSpeech { Noun, Adjective, Adverb, Other };

std::string_view to_string(PartOfSpeech p);
// Maps common tag spellings (Noun, NOUN, NN, n, ...) onto the enum;
// anything unrecognized becomes Other.
PartOfSpeech parse_pos(std::string_view s);

struct TokenFrequency {
  std::string word;
  PartOfSpeech pos = PartOfSpeech::Other;
  std::int64_t count = 0;

  bool operator==(const TokenFrequency&) const = default;
};

// Per-file ingestion outcome, printed to stderr by the CLI.
struct IngestSummary {
  std::string source;
  std::size_t loaded = 0;
  std::size_t duplicates = 0;
  std::map<std::string, std::size_t> skipped;  // reason -> count

  std::size_t skipped_total() const;
  std::string describe() const;
};

template <typename T>
struct Loaded {
  std::vector<T> items;
  IngestSummary summary;
};

// Triples in one of three line formats: a JSON record with head/relation/tail
// fields, a comma- or tab-separated "head,relation,tail" row, or a raw
// ConceptNet assertion row (uri, /r/Rel, /c/en/head, /c/en/tail, ...).
// Output is normalized, deduplicated, and sorted.
Loaded<KnowledgeTriple> load_triples(const std::filesystem::path& path);

// Definitions from JSON records (word, definition[, source]) or
// tab-separated "word<TAB>definition" rows. Definitions for the same word
// are concatenated with "; " in path order and their sources unioned.
Loaded<DefinitionRecord> load_definitions(const std::vector<std::filesystem::path>& paths);

// Frequencies from JSON records (word, pos, count) or delimited rows.
// Repeated (word, pos) rows have their counts summed.
Loaded<TokenFrequency> load_frequencies(const std::filesystem::path& path);

// Cloze records are JSON only; verb_span is given in code point offsets.
Loaded<ClozeRecord> load_cloze(const std::filesystem::path& path);

Json to_json(const KnowledgeTriple& t);
Json to_json(const DefinitionRecord& d);
Json to_json(const TokenFrequency& f);
Json to_json(const ClozeRecord& r);
ClozeRecord cloze_from_json(const Json& rec);

// One record per line, using the JSON forms above.
template <typename T>
std::string serialize_records(const std::vector<T>& items) {
  std::string out;
  for (const auto& item : items) {
    out += dump_record(to_json(item));
    out += '\n';
  }
  return out;
}

}  // namespace negprobe
