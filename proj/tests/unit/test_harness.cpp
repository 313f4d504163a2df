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
#include "negprobe/harness.hpp"
#include "negprobe/metrics.hpp"
#include "negprobe/probegen.hpp"
#include "negprobe/records.hpp"
#include "test_support.hpp"

using namespace negprobe;
using negprobe::testing::TempDir;
using negprobe::testing::fixture;
using negprobe::testing::read_text;
using negprobe::testing::write_text;

namespace {

std::vector<MaskedQuery> mwr_queries() {
  auto freqs = load_frequencies(fixture("frequencies.tsv"));
  auto triples = load_triples(fixture("lexicon.tsv"));
  return build_mwr(freqs.items, triples.items, default_mwr_templates()).queries;
}

std::vector<MaskedQuery> mkr_queries() {
  auto records = load_cloze(fixture("cloze_relations.jsonl"));
  auto triples = load_triples(fixture("lexicon.tsv"));
  return build_mkr_nq(records.items, triples.items).queries;
}

}  // namespace

TEST_CASE("geometric confidences") {
  auto c = geometric_confidences(3);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == 4.0 / 7.0);
  CHECK(c[1] == 2.0 / 7.0);
  CHECK(c[2] == 1.0 / 7.0);
  double total = 0;
  for (double x : geometric_confidences(20)) total += x;
  CHECK(total == doctest::Approx(1.0));
  CHECK_THROWS_AS(geometric_confidences(0), UsageError);
}

TEST_CASE("lookup model on the wrong-set head scores HR@1 = 100") {
  auto queries = mwr_queries();
  auto preds = mock_lookup_model(queries, answer_table_from(queries, AnswerSource::WrongSet), 5);
  REQUIRE(preds.size() == queries.size());
  for (const auto& p : preds) {
    CHECK(p.size() == 5);
    CHECK(p.items()[0].confidence == 16.0 / 31.0);
  }
  auto report = aggregate(queries, preds, {1});
  CHECK(report.per_k[0].hr == 100.0);

  auto gold = mock_lookup_model(queries, answer_table_from(queries, AnswerSource::GoldSet), 5);
  CHECK(aggregate(queries, gold, {1}).per_k[0].hr == 0.0);
}

TEST_CASE("lookup model needs an entry or a fallback") {
  auto queries = mkr_queries();
  AnswerTable partial{{queries[0].id, {"fact"}}};
  CHECK_THROWS_AS(mock_lookup_model(queries, partial, 3), DataError);
  auto preds = mock_lookup_model(queries, partial, 3, std::string("stuff"));
  CHECK(preds[0].items()[0].word == "fact");
  CHECK(preds[1].items()[0].word == "stuff");
}

TEST_CASE("echo model") {
  auto mwr = mwr_queries();
  auto preds = mock_echo_model(mwr);
  auto ratios = regeneration_ratio(mwr, preds);
  CHECK(*ratios.r_syn == 100.0);
  CHECK(*ratios.r_ant == 100.0);

  auto mkr = mkr_queries();
  auto echo = mock_echo_model(mkr, 5);
  for (std::size_t i = 0; i < mkr.size(); ++i) {
    CHECK(echo[i].items()[0].word == mkr[i].source_word);
    CHECK(echo[i].size() == 5);
  }
  CHECK(mock_echo_model({}).empty());
}

TEST_CASE("mock outputs are byte-identical across runs") {
  auto queries = mwr_queries();
  auto table = answer_table_from(queries, AnswerSource::WrongSet);
  CHECK(serialize_prediction_batch(mock_lookup_model(queries, table, 5)) ==
        serialize_prediction_batch(mock_lookup_model(queries, table, 5)));
  CHECK(serialize_prediction_batch(mock_echo_model(queries)) == serialize_prediction_batch(mock_echo_model(queries)));
}

TEST_CASE("query and prediction batches round-trip") {
  TempDir dir;
  auto queries = mkr_queries();
  write_file_atomic(dir / "q.jsonl", serialize_query_batch(queries));
  auto back = read_query_batch(dir / "q.jsonl");
  CHECK(serialize_query_batch(back) == serialize_query_batch(queries));

  auto preds = mock_echo_model(queries);
  write_file_atomic(dir / "p.jsonl", serialize_prediction_batch(preds));
  CHECK(serialize_prediction_batch(read_prediction_batch(dir / "p.jsonl")) == serialize_prediction_batch(preds));
}

TEST_CASE("batch readers reject duplicates and name the line") {
  TempDir dir;
  std::string line = dump_record(to_json(mkr_queries()[0]));
  write_text(dir / "dup.jsonl", line + "\n" + line + "\n");
  try {
    read_query_batch(dir / "dup.jsonl");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  write_text(dir / "p.jsonl",
             "{\"query_id\": \"a\", \"items\": [{\"word\": \"x\", \"confidence\": 0.5}]}\n"
             "{\"query_id\": \"a\", \"items\": []}\n");
  CHECK_THROWS_AS(read_prediction_batch(dir / "p.jsonl"), DataError);
  write_text(dir / "bad.jsonl", "{\"query_id\": \"a\", \"items\": [{\"word\": \"x\", \"confidence\": -1}]}\n");
  CHECK_THROWS_AS(read_prediction_batch(dir / "bad.jsonl"), DataError);
}

TEST_CASE("unknown fields are ignored on read") {
  TempDir dir;
  Json rec = to_json(mkr_queries()[0]);
  rec["added_later"] = {{"nested", true}};
  write_text(dir / "q.jsonl", dump_record(rec) + "\n");
  CHECK(read_query_batch(dir / "q.jsonl").size() == 1);
}

TEST_CASE("answer table file") {
  TempDir dir;
  write_text(dir / "a.jsonl", "{\"query_id\": \"q1\", \"answers\": [\"Girl\", \"sister\"]}\n");
  auto table = read_answer_table(dir / "a.jsonl");
  CHECK(table.at("q1") == std::vector<std::string>{"Girl", "sister"});
  write_text(dir / "b.jsonl", "{\"query_id\": \"q1\", \"answers\": \"girl\"}\n");
  CHECK_THROWS_AS(read_answer_table(dir / "b.jsonl"), DataError);
}

TEST_CASE("run manifest records checksums and seed") {
  TempDir dir;
  write_text(dir / "in.txt", "abc");
  write_text(dir / "out.txt", "");
  RunManifest m("build-sar", {"negprobe", "build-sar"});
  m.add_input(dir / "in.txt");
  m.add_output(dir / "out.txt");
  m.set_seed(42);
  m.set("counts", Json{{"train", 1}});
  m.write(dir / "out.txt.manifest.json");
  Json j = Json::parse(read_text(dir / "out.txt.manifest.json"));
  CHECK(j["command"] == "build-sar");
  CHECK(j["seed"] == 42);
  CHECK(j["tool_version"] == std::string(kToolVersion));
  CHECK(j["inputs"][(dir / "in.txt").string()] ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(j["outputs"][(dir / "out.txt").string()] ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(j["counts"]["train"] == 1);
  CHECK(j["started_at"].get<std::string>().size() == 20);
}
