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

#include "doctest.h"
#include "negprobe/corpus.hpp"
#include "negprobe/error.hpp"
#include "negprobe/records.hpp"
#include "test_support.hpp"

using namespace negprobe;
using negprobe::testing::TempDir;
using negprobe::testing::fixture;
using negprobe::testing::write_text;

TEST_CASE("triple from a comma row") {
  TempDir dir;
  write_text(dir / "t.csv", "bird,CapableOf,fly\n");
  auto loaded = load_triples(dir / "t.csv");
  REQUIRE(loaded.items.size() == 1);
  CHECK(loaded.items[0] == KnowledgeTriple{"bird", Relation::CapableOf, "fly"});
  CHECK(loaded.summary.skipped_total() == 0);
}

TEST_CASE("empty triple file") {
  TempDir dir;
  write_text(dir / "t.tsv", "");
  auto loaded = load_triples(dir / "t.tsv");
  CHECK(loaded.items.empty());
  CHECK(loaded.summary.skipped_total() == 0);
}

TEST_CASE("duplicates collapse without counting as skipped") {
  TempDir dir;
  write_text(dir / "t.tsv", "bird\tCapableOf\tfly\nBird\tCapableOf\tFly \nfish\tCapableOf\tswim\n");
  auto loaded = load_triples(dir / "t.tsv");
  CHECK(loaded.items.size() == 2);
  CHECK(loaded.summary.skipped_total() == 0);
  CHECK(loaded.summary.duplicates == 1);
}

TEST_CASE("unknown relations and bad rows are skipped and counted") {
  TempDir dir;
  write_text(dir / "t.tsv",
             "dog\tAtLocation\thouse\n"
             "dog\tIsA\n"
             "{\"head\": \" \", \"relation\": \"IsA\", \"tail\": \"pet\"}\n"
             "{\"head\": \"cat\", \"relation\": \"IsA\", \"tail\": \"pet\"}\n"
             "{broken\n");
  auto loaded = load_triples(dir / "t.tsv");
  REQUIRE(loaded.items.size() == 1);
  CHECK(loaded.items[0] == KnowledgeTriple{"cat", Relation::IsA, "pet"});
  CHECK(loaded.summary.skipped.at("unknown_relation") == 1);
  CHECK(loaded.summary.skipped.at("malformed") == 2);
  CHECK(loaded.summary.skipped.at("empty_field") == 1);
}

TEST_CASE("conceptnet assertion rows") {
  TempDir dir;
  write_text(dir / "cn.csv",
             "/a/[/r/Antonym/,/c/en/hot/,/c/en/cold/]\t/r/Antonym\t/c/en/hot\t/c/en/cold\t{}\n"
             "/a/x\t/r/Synonym\t/c/en/ice_cream/n\t/c/en/gelato\t{}\n"
             "/a/y\t/r/Synonym\t/c/fr/chat\t/c/en/cat\t{}\n");
  auto loaded = load_triples(dir / "cn.csv");
  REQUIRE(loaded.items.size() == 2);
  CHECK(loaded.items[0] == KnowledgeTriple{"hot", Relation::Antonym, "cold"});
  CHECK(loaded.items[1] == KnowledgeTriple{"ice cream", Relation::Synonym, "gelato"});
  CHECK(loaded.summary.skipped.at("non_english") == 1);
}

TEST_CASE("every relation round-trips through parse and serialize") {
  for (Relation r : kAllRelations) {
    auto parsed = parse_relation(to_string(r));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == r);
    CHECK(parse_relation("/r/" + std::string(to_string(r))) == r);
  }
  CHECK_FALSE(parse_relation("AtLocation").has_value());
  CHECK_FALSE(parse_relation("isa").has_value());
}

TEST_CASE("single-source definition") {
  TempDir dir;
  write_text(dir / "a.tsv", "career\tthe particular occupation for which you are trained\n");
  auto loaded = load_definitions({dir / "a.tsv"});
  REQUIRE(loaded.items.size() == 1);
  CHECK(loaded.items[0].word == "career");
  CHECK(loaded.items[0].definition == "the particular occupation for which you are trained");
  CHECK(loaded.items[0].sources == std::set<std::string>{"a"});
}

TEST_CASE("definitions from two sources are concatenated in order") {
  TempDir dir;
  write_text(dir / "a.tsv", "x\td1\n");
  write_text(dir / "b.jsonl", "{\"word\": \"X\", \"definition\": \"d2\", \"source\": \"wiki\"}\n");
  auto loaded = load_definitions({dir / "a.tsv", dir / "b.jsonl"});
  REQUIRE(loaded.items.size() == 1);
  CHECK(loaded.items[0].definition == "d1; d2");
  CHECK(loaded.items[0].sources == std::set<std::string>{"a", "wiki"});
}

TEST_CASE("definition edge cases") {
  TempDir dir;
  write_text(dir / "a.tsv", "");
  write_text(dir / "b.tsv", "");
  CHECK(load_definitions({dir / "a.tsv", dir / "b.tsv"}).items.empty());
  CHECK_THROWS_AS(load_definitions({}), UsageError);

  write_text(dir / "c.tsv", "{\"word\": \"word\", \"definition\": \"  \"}\nother\tsame\nother\tsame\n");
  auto loaded = load_definitions({dir / "c.tsv"});
  REQUIRE(loaded.items.size() == 1);
  CHECK(loaded.items[0].definition == "same");
  CHECK(loaded.summary.skipped.at("empty_definition") == 1);
}

TEST_CASE("frequency rows") {
  TempDir dir;
  write_text(dir / "f.tsv", "happy\tadj\t812\nthe\tother\t99999\nbad\tadj\t-1\n");
  auto loaded = load_frequencies(dir / "f.tsv");
  REQUIRE(loaded.items.size() == 2);
  CHECK(loaded.items[0] == TokenFrequency{"happy", PartOfSpeech::Adjective, 812});
  CHECK(loaded.items[1] == TokenFrequency{"the", PartOfSpeech::Other, 99999});
  CHECK(loaded.summary.skipped.at("negative_count") == 1);
}

TEST_CASE("part of speech spellings") {
  CHECK(parse_pos("NOUN") == PartOfSpeech::Noun);
  CHECK(parse_pos("nns") == PartOfSpeech::Noun);
  CHECK(parse_pos("JJ") == PartOfSpeech::Adjective);
  CHECK(parse_pos("adv") == PartOfSpeech::Adverb);
  CHECK(parse_pos("verb") == PartOfSpeech::Other);
}

TEST_CASE("ingestion is idempotent") {
  TempDir dir;
  auto first = load_triples(fixture("lexicon.tsv"));
  auto again = load_triples(fixture("lexicon.tsv"));
  CHECK(first.items == again.items);
  write_file_atomic(dir / "canon.jsonl", serialize_records(first.items));
  CHECK(load_triples(dir / "canon.jsonl").items == first.items);

  auto defs = load_definitions({fixture("definitions_a.jsonl"), fixture("definitions_b.tsv")});
  write_file_atomic(dir / "defs.jsonl", serialize_records(defs.items));
  CHECK(load_definitions({dir / "defs.jsonl"}).items == defs.items);

  auto freqs = load_frequencies(fixture("frequencies.tsv"));
  write_file_atomic(dir / "freqs.jsonl", serialize_records(freqs.items));
  CHECK(load_frequencies(dir / "freqs.jsonl").items == freqs.items);
}

TEST_CASE("toy definition corpus has 100 words, ten of them merged") {
  auto defs = load_definitions({fixture("definitions_a.jsonl"), fixture("definitions_b.tsv")});
  CHECK(defs.items.size() == 100);
  int merged = 0;
  for (const auto& d : defs.items) {
    if (d.sources.size() == 2) {
      ++merged;
      CHECK(d.definition.find("; also ") != std::string::npos);
    }
  }
  CHECK(merged == 10);
}

TEST_CASE("cloze records: offsets are code points, invariants enforced") {
  TempDir dir;
  write_text(dir / "c.jsonl",
             "{\"text\": \"Caf\xC3\xA9 is a [MASK].\", \"verb_span\": [5, 7], \"verb_pos\": \"VBZ\", "
             "\"head\": \"caf\xC3\xA9\", \"relation\": \"IsA\", \"answer\": \"place\", \"note\": 1}\n"
             "{\"text\": \"A [MASK] is a [MASK].\", \"verb_span\": [9, 11], \"verb_pos\": \"VBZ\", "
             "\"head\": \"a\", \"relation\": \"IsA\"}\n"
             "{\"text\": \"A dog is [MASK].\", \"verb_span\": [9, 15], \"verb_pos\": \"VBZ\", "
             "\"head\": \"dog\", \"relation\": \"IsA\"}\n"
             "{\"text\": \"A dog is [MASK].\", \"verb_span\": [6, 8], \"verb_pos\": \"VBZ\", "
             "\"head\": \"dog\", \"relation\": \"LocatedNear\"}\n");
  auto loaded = load_cloze(dir / "c.jsonl");
  REQUIRE(loaded.items.size() == 1);
  const auto& r = loaded.items[0];
  CHECK(r.verb_text() == "is");
  CHECK(r.verb_span == Span{6, 8});  // bytes
  CHECK(to_json(r)["verb_span"] == Json::array({5, 7}));
  CHECK(loaded.summary.skipped.at("invalid_record") == 2);
  CHECK(loaded.summary.skipped.at("unknown_relation") == 1);
}

TEST_CASE("cloze validate rejects bad spans") {
  ClozeRecord r;
  r.text = "A dog is [MASK].";
  r.head = "dog";
  r.verb_pos = "VBZ";
  r.verb_span = {6, 8};
  CHECK_NOTHROW(r.validate());
  r.verb_span = {8, 8};
  CHECK_THROWS_AS(r.validate(), DataError);
  r.verb_span = {6, 30};
  CHECK_THROWS_AS(r.validate(), DataError);
  r.verb_span = {6, 8};
  r.head = " ";
  CHECK_THROWS_AS(r.validate(), DataError);
}

TEST_CASE("missing input file is a data error naming the path") {
  try {
    load_triples("/no/such/triples.tsv");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("/no/such/triples.tsv") != std::string::npos);
  }
}
