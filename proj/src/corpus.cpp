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

#include "negprobe/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "negprobe/error.hpp"
#include "negprobe/text.hpp"

namespace negprobe {
namespace {

constexpr std::string_view kRelationNames[] = {
    "IsA", "CapableOf", "PartOf", "HasA", "UsedFor",
    "MadeOf", "NotDesires", "Synonym", "Antonym",
};

// "/c/en/ice_cream/n" -> "ice cream"; nullopt for other languages.
std::optional<std::string> concept_surface(std::string_view uri) {
  constexpr std::string_view kPrefix = "/c/en/";
  if (uri.substr(0, kPrefix.size()) != kPrefix) return std::nullopt;
  uri.remove_prefix(kPrefix.size());
  std::string word(uri.substr(0, uri.find('/')));
  std::replace(word.begin(), word.end(), '_', ' ');
  return word;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Splits a delimited row on tabs when present, commas otherwise.
std::vector<std::string> split_row(std::string_view line) {
  return split(line, line.find('\t') != std::string_view::npos ? '\t' : ',');
}

}  // namespace

std::string_view to_string(Relation r) {
  return kRelationNames[static_cast<std::size_t>(r)];
}

std::optional<Relation> parse_relation(std::string_view s) {
  s = trim(s);
  if (s.substr(0, 3) == "/r/") s.remove_prefix(3);
  for (Relation r : kAllRelations) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

std::string_view to_string(PartOfSpeech p) {
  switch (p) {
    case PartOfSpeech::Noun: return "Noun";
    case PartOfSpeech::Adjective: return "Adjective";
    case PartOfSpeech::Adverb: return "Adverb";
    case PartOfSpeech::Other: return "Other";
  }
  return "Other";
}

PartOfSpeech parse_pos(std::string_view s) {
  std::string tag = normalize_word(s);
  if (tag == "noun" || tag == "n" || tag == "nn" || tag == "nns" || tag == "propn") {
    return PartOfSpeech::Noun;
  }
  if (tag == "adjective" || tag == "adj" || tag == "a" || tag == "jj" || tag == "s") {
    return PartOfSpeech::Adjective;
  }
  if (tag == "adverb" || tag == "adv" || tag == "r" || tag == "rb") {
    return PartOfSpeech::Adverb;
  }
  return PartOfSpeech::Other;
}

void ClozeRecord::validate() const {
  if (count_occurrences(text, kMaskToken) != 1) {
    throw DataError("cloze text must contain exactly one " + std::string(kMaskToken) + ": " + text);
  }
  if (verb_span.start >= verb_span.end || verb_span.end > text.size()) {
    throw DataError("verb span is empty or outside the text: " + text);
  }
  std::size_t mask = text.find(kMaskToken);
  if (verb_span.start < mask + kMaskToken.size() && mask < verb_span.end) {
    throw DataError("verb span overlaps the mask: " + text);
  }
  if (trim(verb_text()).empty()) throw DataError("verb span is blank: " + text);
  if (trim(head).empty()) throw DataError("cloze record has an empty head: " + text);
}

std::string_view ClozeRecord::verb_text() const {
  return std::string_view(text).substr(verb_span.start, verb_span.end - verb_span.start);
}

std::size_t IngestSummary::skipped_total() const {
  std::size_t total = 0;
  for (const auto& [reason, n] : skipped) total += n;
  return total;
}

std::string IngestSummary::describe() const {
  std::ostringstream out;
  out << source << ": loaded " << loaded << ", skipped " << skipped_total();
  if (duplicates > 0) out << ", duplicates " << duplicates;
  for (const auto& [reason, n] : skipped) out << " [" << reason << "=" << n << "]";
  return out.str();
}

Loaded<KnowledgeTriple> load_triples(const std::filesystem::path& path) {
  Loaded<KnowledgeTriple> result;
  result.summary.source = path.string();
  std::set<KnowledgeTriple> seen;

  for_each_line(path, [&](std::size_t line_number, std::string_view line) {
    std::string head, rel, tail;
    if (line.front() == '{') {
      Json rec = Json::parse(line, nullptr, false);
      if (rec.is_discarded() || !rec.is_object()) {
        ++result.summary.skipped["malformed"];
        return;
      }
      head = optional_string(rec, "head");
      rel = optional_string(rec, "relation");
      tail = optional_string(rec, "tail");
    } else {
      std::vector<std::string> cols = split_row(line);
      if (cols.size() >= 4 && cols[1].rfind("/r/", 0) == 0) {
        auto h = concept_surface(cols[2]);
        auto t = concept_surface(cols[3]);
        if (!h || !t) {
          ++result.summary.skipped["non_english"];
          return;
        }
        head = *h;
        rel = cols[1];
        tail = *t;
      } else if (cols.size() == 3) {
        head = cols[0];
        rel = cols[1];
        tail = cols[2];
      } else {
        ++result.summary.skipped["malformed"];
        return;
      }
    }
    (void)line_number;

    auto relation = parse_relation(rel);
    if (!relation) {
      ++result.summary.skipped["unknown_relation"];
      return;
    }
    KnowledgeTriple triple{normalize_word(head), *relation, normalize_word(tail)};
    if (triple.head.empty() || triple.tail.empty()) {
      ++result.summary.skipped["empty_field"];
      return;
    }
    if (!seen.insert(triple).second) {
      ++result.summary.duplicates;
      return;
    }
    result.items.push_back(std::move(triple));
  });

  result.summary.loaded = result.items.size();
  return result;
}

Loaded<DefinitionRecord> load_definitions(const std::vector<std::filesystem::path>& paths) {
  if (paths.empty()) throw UsageError("load_definitions needs at least one definition file");

  Loaded<DefinitionRecord> result;
  std::vector<std::string> names;
  std::map<std::string, DefinitionRecord> merged;
  std::map<std::string, std::vector<std::string>> parts;

  for (const auto& path : paths) {
    names.push_back(path.string());
    const std::string default_source = path.stem().string();
    for_each_line(path, [&](std::size_t line_number, std::string_view line) {
      std::string word, definition;
      std::set<std::string> sources;
      if (line.front() == '{') {
        Json rec = parse_record(line, path, line_number);
        word = optional_string(rec, "word");
        definition = optional_string(rec, "definition");
        if (auto it = rec.find("sources"); it != rec.end() && it->is_array()) {
          for (const auto& s : *it) {
            if (s.is_string()) sources.insert(s.get<std::string>());
          }
        }
        if (auto s = optional_string(rec, "source"); !s.empty()) sources.insert(s);
      } else {
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) {
          ++result.summary.skipped["malformed"];
          return;
        }
        word = std::string(line.substr(0, tab));
        definition = std::string(line.substr(tab + 1));
      }
      word = normalize_word(word);
      definition = std::string(trim(definition));
      if (word.empty()) {
        ++result.summary.skipped["empty_word"];
        return;
      }
      if (definition.empty()) {
        ++result.summary.skipped["empty_definition"];
        return;
      }
      auto& pieces = parts[word];
      DefinitionRecord& rec = merged[word];
      rec.word = word;
      if (sources.empty()) sources.insert(default_source);
      rec.sources.insert(sources.begin(), sources.end());
      if (std::find(pieces.begin(), pieces.end(), definition) != pieces.end()) {
        ++result.summary.duplicates;
        return;
      }
      pieces.push_back(std::move(definition));
    });
  }

  for (auto& [word, rec] : merged) {
    rec.definition = join(parts[word], "; ");
    result.items.push_back(std::move(rec));
  }
  result.summary.source = join(names, ",");
  result.summary.loaded = result.items.size();
  return result;
}

Loaded<TokenFrequency> load_frequencies(const std::filesystem::path& path) {
  Loaded<TokenFrequency> result;
  result.summary.source = path.string();
  std::map<std::pair<std::string, PartOfSpeech>, std::size_t> index;

  for_each_line(path, [&](std::size_t line_number, std::string_view line) {
    std::string word, pos;
    std::optional<std::int64_t> count;
    if (line.front() == '{') {
      Json rec = parse_record(line, path, line_number);
      word = optional_string(rec, "word");
      pos = optional_string(rec, "pos");
      auto it = rec.find("count");
      if (it != rec.end() && it->is_number_integer()) count = it->get<std::int64_t>();
    } else {
      std::vector<std::string> cols = split_row(line);
      if (cols.size() != 3) {
        ++result.summary.skipped["malformed"];
        return;
      }
      word = cols[0];
      pos = cols[1];
      count = parse_int(cols[2]);
    }
    if (!count) {
      ++result.summary.skipped["malformed"];
      return;
    }
    if (*count < 0) {
      ++result.summary.skipped["negative_count"];
      return;
    }
    TokenFrequency freq{normalize_word(word), parse_pos(pos), *count};
    if (freq.word.empty()) {
      ++result.summary.skipped["empty_word"];
      return;
    }
    auto key = std::make_pair(freq.word, freq.pos);
    if (auto it = index.find(key); it != index.end()) {
      result.items[it->second].count += freq.count;
      ++result.summary.duplicates;
      return;
    }
    index.emplace(key, result.items.size());
    result.items.push_back(std::move(freq));
  });

  result.summary.loaded = result.items.size();
  return result;
}

ClozeRecord cloze_from_json(const Json& rec) {
  ClozeRecord r;
  r.id = optional_string(rec, "id");
  r.text = require_string(rec, "text");
  r.answer = normalize_word(optional_string(rec, "answer"));
  r.head = normalize_word(require_string(rec, "head"));
  auto relation = parse_relation(require_string(rec, "relation"));
  if (!relation) throw DataError("unknown relation: " + require_string(rec, "relation"));
  r.relation = *relation;

  auto span = rec.find("verb_span");
  if (span == rec.end() || !span->is_array() || span->size() != 2 ||
      !(*span)[0].is_number_unsigned() || !(*span)[1].is_number_unsigned()) {
    throw DataError("verb_span must be a [start, end] pair of non-negative integers");
  }
  r.verb_span.start = utf8_byte_offset(r.text, (*span)[0].get<std::size_t>());
  r.verb_span.end = utf8_byte_offset(r.text, (*span)[1].get<std::size_t>());
  r.verb_pos = std::string(trim(require_string(rec, "verb_pos")));
  r.verb_lemma = normalize_word(optional_string(rec, "verb_lemma"));
  r.validate();
  return r;
}

Loaded<ClozeRecord> load_cloze(const std::filesystem::path& path) {
  Loaded<ClozeRecord> result;
  result.summary.source = path.string();
  for_each_line(path, [&](std::size_t line_number, std::string_view line) {
    Json rec = Json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) {
      ++result.summary.skipped["malformed"];
      return;
    }
    if (auto rel = rec.find("relation"); rel != rec.end() && rel->is_string() &&
                                         !parse_relation(rel->get<std::string>())) {
      ++result.summary.skipped["unknown_relation"];
      return;
    }
    try {
      result.items.push_back(cloze_from_json(rec));
    } catch (const DataError&) {
      ++result.summary.skipped["invalid_record"];
    }
    (void)line_number;
  });
  result.summary.loaded = result.items.size();
  return result;
}

Json to_json(const KnowledgeTriple& t) {
  return Json{{"head", t.head}, {"relation", std::string(to_string(t.relation))}, {"tail", t.tail}};
}

Json to_json(const DefinitionRecord& d) {
  return Json{{"word", d.word}, {"definition", d.definition}, {"sources", d.sources}};
}

Json to_json(const TokenFrequency& f) {
  return Json{{"word", f.word}, {"pos", std::string(to_string(f.pos))}, {"count", f.count}};
}

Json to_json(const ClozeRecord& r) {
  Json rec{
      {"text", r.text},
      {"answer", r.answer},
      {"head", r.head},
      {"relation", std::string(to_string(r.relation))},
      {"verb_span", {utf8_codepoint_offset(r.text, r.verb_span.start),
                     utf8_codepoint_offset(r.text, r.verb_span.end)}},
      {"verb_pos", r.verb_pos},
  };
  if (!r.id.empty()) rec["id"] = r.id;
  if (!r.verb_lemma.empty()) rec["verb_lemma"] = r.verb_lemma;
  return rec;
}

}  // namespace negprobe
