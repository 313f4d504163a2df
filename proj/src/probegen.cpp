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

#include "negprobe/probegen.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <span>

#include "negprobe/error.hpp"
#include "negprobe/negation.hpp"
#include "negprobe/rng.hpp"
#include "negprobe/text.hpp"

namespace negprobe {
namespace {

bool is_in_mkr_nq_whitelist(Relation r) {
  return std::find(std::begin(kMkrNqRelations), std::end(kMkrNqRelations), r) !=
         std::end(kMkrNqRelations);
}

// Replaces the standalone placeholder letter (e.g. "X") in a template.
std::string substitute(std::string_view pattern, char placeholder, std::string_view value,
                       std::size_t* count) {
  std::string out;
  *count = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    bool boundary_before = i == 0 || !std::isalnum(static_cast<unsigned char>(pattern[i - 1]));
    bool boundary_after = i + 1 == pattern.size() ||
                          !std::isalnum(static_cast<unsigned char>(pattern[i + 1]));
    if (pattern[i] == placeholder && boundary_before && boundary_after) {
      out += value;
      ++*count;
    } else {
      out += pattern[i];
    }
  }
  return out;
}

std::string render_template(const MwrTemplate& tmpl, std::string_view word) {
  std::size_t xs = 0, ys = 0;
  std::string text = substitute(tmpl.pattern, 'X', word, &xs);
  text = substitute(text, 'Y', kMaskToken, &ys);
  if (xs != 1 || ys != 1) {
    throw DataError("template must contain X and Y exactly once: " + tmpl.pattern);
  }
  text = std::string(trim(text));
  char last = text.back();
  if (last != '.' && last != '?' && last != '!') text += '.';
  return text;
}

std::string padded(std::size_t n, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, n);
  return buf;
}

std::set<std::string> normalized_set(const Json& rec, std::string_view field) {
  std::set<std::string> out;
  auto it = rec.find(field);
  if (it == rec.end() || it->is_null()) return out;
  if (!it->is_array()) throw DataError("field '" + std::string(field) + "' must be a list");
  for (const auto& w : *it) {
    if (!w.is_string()) throw DataError("field '" + std::string(field) + "' must hold strings");
    std::string n = normalize_word(w.get<std::string>());
    if (!n.empty()) out.insert(std::move(n));
  }
  return out;
}

}  // namespace

std::string_view to_string(QueryKind k) {
  switch (k) {
    case QueryKind::MKR_NQ: return "MKR_NQ";
    case QueryKind::MWR_Synonym: return "MWR_Synonym";
    case QueryKind::MWR_Antonym: return "MWR_Antonym";
  }
  return "MKR_NQ";
}

std::optional<QueryKind> parse_query_kind(std::string_view s) {
  for (QueryKind k : {QueryKind::MKR_NQ, QueryKind::MWR_Synonym, QueryKind::MWR_Antonym}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::string_view to_string(SarLabel l) { return l == SarLabel::Synonym ? "Synonym" : "Antonym"; }

std::string_view to_string(Split s) {
  switch (s) {
    case Split::Train: return "Train";
    case Split::Dev: return "Dev";
    case Split::Test: return "Test";
  }
  return "Train";
}

void MaskedQuery::validate() const {
  if (id.empty()) throw DataError("query without id");
  if (count_occurrences(text, kMaskToken) != 1) {
    throw DataError("query " + id + " must contain exactly one " + std::string(kMaskToken));
  }
  if (wrong_set.empty()) throw DataError("query " + id + " has an empty wrong set");
}

Json to_json(const MaskedQuery& q) {
  Json rec{
      {"id", q.id},
      {"text", q.text},
      {"kind", std::string(to_string(q.kind))},
      {"source_word", q.source_word},
      {"pos", nullptr},
      {"relation", nullptr},
      {"wrong_set", q.wrong_set},
      {"gold_set", q.gold_set},
  };
  if (q.pos) rec["pos"] = std::string(to_string(*q.pos));
  if (q.relation) rec["relation"] = std::string(to_string(*q.relation));
  return rec;
}

MaskedQuery query_from_json(const Json& rec) {
  MaskedQuery q;
  q.id = require_string(rec, "id");
  q.text = require_string(rec, "text");
  std::string kind = require_string(rec, "kind");
  auto parsed = parse_query_kind(kind);
  if (!parsed) throw DataError("query " + q.id + ": unknown kind '" + kind + "'");
  q.kind = *parsed;
  q.source_word = normalize_word(optional_string(rec, "source_word"));
  if (std::string pos = optional_string(rec, "pos"); !pos.empty()) q.pos = parse_pos(pos);
  if (std::string rel = optional_string(rec, "relation"); !rel.empty()) {
    q.relation = parse_relation(rel);
    if (!q.relation) throw DataError("query " + q.id + ": unknown relation '" + rel + "'");
  }
  q.wrong_set = normalized_set(rec, "wrong_set");
  q.gold_set = normalized_set(rec, "gold_set");
  q.validate();
  return q;
}

std::size_t BuildStats::dropped() const {
  std::size_t total = 0;
  for (const auto& [reason, n] : drops) total += n;
  return total;
}

MkrNqResult build_mkr_nq(const std::vector<ClozeRecord>& records,
                         const std::vector<KnowledgeTriple>& triples) {
  if (records.empty()) throw DataError("build_mkr_nq: no cloze records");

  std::map<std::pair<std::string, Relation>, std::set<std::string>> tails;
  for (const auto& t : triples) tails[{t.head, t.relation}].insert(t.tail);

  MkrNqResult result;
  result.stats.inputs = records.size();
  std::set<std::string> ids;

  for (std::size_t i = 0; i < records.size(); ++i) {
    const ClozeRecord& record = records[i];
    if (!is_in_mkr_nq_whitelist(record.relation)) {
      ++result.stats.drops["relation_not_whitelisted"];
      continue;
    }
    auto direction = record.relation == Relation::NotDesires ? NegationDirection::RemoveNegation
                                                             : NegationDirection::AddNegation;
    std::string negated;
    try {
      negated = negate_query(record, direction);
    } catch (const QueryNotNegatable&) {
      ++result.stats.drops["not_negatable"];
      continue;
    }

    auto it = tails.find({normalize_word(record.head), record.relation});
    if (it == tails.end() || it->second.empty()) {
      ++result.stats.drops["empty_wrong_set"];
      continue;
    }

    MaskedQuery q;
    q.id = record.id.empty() ? "mkrnq-" + padded(i, 6) : record.id;
    if (!ids.insert(q.id).second) {
      ++result.stats.drops["duplicate_id"];
      continue;
    }
    q.text = std::move(negated);
    q.kind = QueryKind::MKR_NQ;
    q.source_word = normalize_word(record.head);
    q.relation = record.relation;
    q.wrong_set = it->second;
    if (!record.answer.empty()) q.gold_set.insert(normalize_word(record.answer));
    result.queries.push_back(std::move(q));
  }

  std::sort(result.queries.begin(), result.queries.end(),
            [](const MaskedQuery& a, const MaskedQuery& b) { return a.id < b.id; });
  result.stats.emitted = result.queries.size();
  return result;
}

std::vector<MwrTemplate> default_mwr_templates() {
  return {
      {"X is a synonym of Y", QueryKind::MWR_Synonym},
      {"X is an antonym of Y", QueryKind::MWR_Antonym},
      {"X is another form of Y", QueryKind::MWR_Synonym},
      {"X is the opposite of Y", QueryKind::MWR_Antonym},
      {"X is a rephrasing of Y", QueryKind::MWR_Synonym},
      {"X is different from Y", QueryKind::MWR_Antonym},
  };
}

std::vector<MwrTemplate> load_mwr_templates(const std::filesystem::path& path) {
  std::vector<MwrTemplate> templates;
  for_each_line(path, [&](std::size_t line_number, std::string_view line) {
    Json rec = parse_record(line, path, line_number);
    MwrTemplate t;
    t.pattern = require_string(rec, "template");
    std::string asks = require_string(rec, "asks");
    std::string key = normalize_word(asks);
    if (key == "synonym" || key == "mwr_synonym") t.asks = QueryKind::MWR_Synonym;
    else if (key == "antonym" || key == "mwr_antonym") t.asks = QueryKind::MWR_Antonym;
    else throw DataError(path.string() + ":" + std::to_string(line_number) +
                         ": asks must be Synonym or Antonym");
    templates.push_back(std::move(t));
  });
  return templates;
}

MwrResult build_mwr(const std::vector<TokenFrequency>& freqs,
                    const std::vector<KnowledgeTriple>& triples,
                    const std::vector<MwrTemplate>& templates, const MwrOptions& options) {
  if (templates.empty()) throw DataError("build_mwr: empty template list");

  MwrResult result;

  // Synonym and antonym are symmetric relations; either direction counts.
  std::map<std::string, std::set<std::string>> synonyms, antonyms;
  for (const auto& t : triples) {
    if (t.relation != Relation::Synonym && t.relation != Relation::Antonym) continue;
    if (t.head == t.tail) continue;
    if (!is_single_token(t.head) || !is_single_token(t.tail)) {
      ++result.stats.drops["multiword_relation_filtered"];
      continue;
    }
    auto& table = t.relation == Relation::Synonym ? synonyms : antonyms;
    table[t.head].insert(t.tail);
    table[t.tail].insert(t.head);
  }

  // A word listed under several parts of speech is probed once, under its
  // most frequent eligible tag.
  std::map<std::string, TokenFrequency> candidates;
  for (const auto& f : freqs) {
    ++result.stats.inputs;
    if (f.pos == PartOfSpeech::Other) {
      ++result.stats.drops["pos_filtered"];
      continue;
    }
    if (f.count <= options.min_count_exclusive) {
      ++result.stats.drops["count_filtered"];
      continue;
    }
    auto [it, inserted] = candidates.emplace(f.word, f);
    if (!inserted) {
      ++result.stats.drops["duplicate_word"];
      if (f.count > it->second.count ||
          (f.count == it->second.count && f.pos < it->second.pos)) {
        it->second = f;
      }
    }
  }

  for (const auto& [word, freq] : candidates) {
    std::set<std::string> syn = synonyms.count(word) ? synonyms[word] : std::set<std::string>{};
    std::set<std::string> ant = antonyms.count(word) ? antonyms[word] : std::set<std::string>{};
    std::set<std::string> both;
    std::set_intersection(syn.begin(), syn.end(), ant.begin(), ant.end(),
                          std::inserter(both, both.begin()));
    if (!both.empty()) {
      for (const auto& w : both) {
        syn.erase(w);
        ant.erase(w);
      }
      result.conflicts[word] = both;
    }
    if (syn.empty()) {
      ++result.stats.drops["no_synonym"];
      continue;
    }
    if (ant.empty()) {
      ++result.stats.drops["no_antonym"];
      continue;
    }

    for (std::size_t t = 0; t < templates.size(); ++t) {
      MaskedQuery q;
      q.id = "mwr-" + word + "-" + padded(t, 2);
      q.text = render_template(templates[t], word);
      q.kind = templates[t].asks;
      q.source_word = word;
      q.pos = freq.pos;
      if (q.kind == QueryKind::MWR_Synonym) {
        q.gold_set = syn;
        q.wrong_set = ant;
      } else {
        q.gold_set = ant;
        q.wrong_set = syn;
        for (std::string variant : {word, word + "s", word + "es"}) {
          if (!ant.count(variant)) q.wrong_set.insert(std::move(variant));
        }
      }
      result.queries.push_back(std::move(q));
    }
  }

  std::sort(result.queries.begin(), result.queries.end(),
            [](const MaskedQuery& a, const MaskedQuery& b) { return a.id < b.id; });
  result.stats.emitted = result.queries.size();
  return result;
}

Json to_json(const SarPair& p) {
  return Json{{"word_a", p.word_a},
              {"word_b", p.word_b},
              {"label", std::string(to_string(p.label))},
              {"split", std::string(to_string(p.split))}};
}

std::vector<SarPair> build_sar(const std::vector<KnowledgeTriple>& triples, const SarSizes& sizes,
                               std::uint64_t seed) {
  std::map<std::pair<std::string, std::string>, std::set<SarLabel>> labels;
  for (const auto& t : triples) {
    if (t.relation != Relation::Synonym && t.relation != Relation::Antonym) continue;
    if (t.head == t.tail) continue;
    auto key = t.head < t.tail ? std::make_pair(t.head, t.tail) : std::make_pair(t.tail, t.head);
    labels[key].insert(t.relation == Relation::Synonym ? SarLabel::Synonym : SarLabel::Antonym);
  }

  std::vector<std::pair<std::string, std::string>> syn_pool, ant_pool;
  for (const auto& [pair, ls] : labels) {
    if (ls.size() != 1) continue;
    (*ls.begin() == SarLabel::Synonym ? syn_pool : ant_pool).push_back(pair);
  }

  const std::size_t split_sizes[] = {sizes.train, sizes.dev, sizes.test};
  std::size_t need_ant = 0, need_syn = 0;
  for (std::size_t n : split_sizes) {
    need_ant += n / 2;
    need_syn += n - n / 2;
  }
  std::string shortfall;
  if (ant_pool.size() < need_ant) {
    shortfall += "antonym pairs: need " + std::to_string(need_ant) + ", have " +
                 std::to_string(ant_pool.size());
  }
  if (syn_pool.size() < need_syn) {
    if (!shortfall.empty()) shortfall += "; ";
    shortfall += "synonym pairs: need " + std::to_string(need_syn) + ", have " +
                 std::to_string(syn_pool.size());
  }
  if (!shortfall.empty()) throw DataError("build_sar: insufficient data (" + shortfall + ")");

  Rng rng(seed);
  rng.shuffle(std::span(ant_pool));
  rng.shuffle(std::span(syn_pool));

  std::vector<SarPair> out;
  std::size_t ant_next = 0, syn_next = 0;
  const Split splits[] = {Split::Train, Split::Dev, Split::Test};
  for (std::size_t s = 0; s < 3; ++s) {
    std::vector<SarPair> chunk;
    std::size_t n_ant = split_sizes[s] / 2;
    std::size_t n_syn = split_sizes[s] - n_ant;
    for (std::size_t i = 0; i < n_ant; ++i, ++ant_next) {
      chunk.push_back({ant_pool[ant_next].first, ant_pool[ant_next].second, SarLabel::Antonym,
                       splits[s]});
    }
    for (std::size_t i = 0; i < n_syn; ++i, ++syn_next) {
      chunk.push_back({syn_pool[syn_next].first, syn_pool[syn_next].second, SarLabel::Synonym,
                       splits[s]});
    }
    rng.shuffle(std::span(chunk));
    out.insert(out.end(), chunk.begin(), chunk.end());
  }
  return out;
}

}  // namespace negprobe
