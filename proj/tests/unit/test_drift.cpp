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

#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>

#include "doctest.h"
#include "negprobe/drift.hpp"
#include "negprobe/error.hpp"
#include "negprobe/records.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace negprobe;
using negprobe::testing::TempDir;
using negprobe::testing::read_text;

namespace {

LayerWeights layer(std::string name, std::vector<std::int64_t> shape, float fill) {
  std::int64_t n = 1;
  for (auto d : shape) n *= d;
  return {std::move(name), std::move(shape), std::vector<float>(static_cast<std::size_t>(n), fill)};
}

LayerWeights random_layer(std::string name, std::size_t n, std::mt19937& gen) {
  std::normal_distribution<float> d(0.0f, 0.1f);
  LayerWeights l{std::move(name), {static_cast<std::int64_t>(n)}, std::vector<float>(n)};
  for (auto& v : l.values) v = d(gen);
  return l;
}

LayerWeights shifted(LayerWeights l, float eps) {
  for (auto& v : l.values) v += eps;
  return l;
}

}  // namespace

TEST_CASE("identical layers have zero drift") {
  std::mt19937 gen(1);
  auto a = random_layer("w", 100, gen);
  CHECK(frobenius_drift(a, a) == 0.0);
}

TEST_CASE("constant shift: F = eps * sqrt(n) / n") {
  for (std::size_t n : {4u, 16u, 100u}) {
    // 0.25 + 2^-6 is exact in float, so the closed form holds tightly.
    auto before = layer("w", {static_cast<std::int64_t>(n)}, 0.25f);
    auto after = shifted(before, 0.015625f);
    double expected = 0.015625 * std::sqrt(static_cast<double>(n)) / static_cast<double>(n);
    CHECK(std::fabs(frobenius_drift(before, after) - expected) <= 1e-15);
  }
}

TEST_CASE("symmetry, scaling and the triangle bound") {
  std::mt19937 gen(3);
  auto a = random_layer("w", 64, gen);
  auto b = random_layer("w", 64, gen);
  auto c = random_layer("w", 64, gen);
  CHECK(frobenius_drift(a, b) == frobenius_drift(b, a));
  CHECK(frobenius_drift(a, c) <= frobenius_drift(a, b) + frobenius_drift(b, c) + 1e-15);

  auto zero = layer("w", {64}, 0.0f);
  auto d1 = zero, d2 = zero;
  for (std::size_t i = 0; i < 64; ++i) {
    d1.values[i] = static_cast<float>(i % 5) * 0.125f;
    d2.values[i] = d1.values[i] * 4.0f;
  }
  CHECK(frobenius_drift(zero, d2) == doctest::Approx(4.0 * frobenius_drift(zero, d1)).epsilon(1e-12));
}

TEST_CASE("relative normalization") {
  auto before = layer("w", {4}, 2.0f);  // norm 4
  auto after = shifted(before, 1.0f);    // diff norm 2
  CHECK(frobenius_drift(before, after, DriftNormalization::Relative) == doctest::Approx(0.5));
  auto zero = layer("w", {4}, 0.0f);
  CHECK_THROWS_AS(frobenius_drift(zero, after, DriftNormalization::Relative), DataError);
}

TEST_CASE("mismatched layers are rejected") {
  auto a = layer("w", {2, 2}, 1.0f);
  auto b = layer("w", {4}, 1.0f);
  auto c = layer("v", {2, 2}, 1.0f);
  CHECK_THROWS_AS(frobenius_drift(a, b), DataError);
  CHECK_THROWS_AS(frobenius_drift(a, c), DataError);
  LayerWeights bad{"x", {3}, {1.0f}};
  CHECK_THROWS_AS(bad.validate(), DataError);
}

TEST_CASE("dump round-trip is bit exact") {
  TempDir dir;
  std::vector<LayerWeights> layers{
      {"embeddings.word", {2, 3}, {1.5f, -0.0f, std::numeric_limits<float>::denorm_min(), 3.0e38f, -7.25f, 0.1f}},
      {"encoder.layer.0/attn", {1}, {std::numeric_limits<float>::infinity()}},
  };
  write_dump(dir.path(), layers);
  auto back = read_dump(dir.path());
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].layer_name == layers[i].layer_name);
    CHECK(back[i].shape == layers[i].shape);
    REQUIRE(back[i].values.size() == layers[i].values.size());
    for (std::size_t j = 0; j < back[i].values.size(); ++j) {
      CHECK(std::bit_cast<std::uint32_t>(back[i].values[j]) == std::bit_cast<std::uint32_t>(layers[i].values[j]));
    }
  }
  CHECK(dump_checksum(back) == dump_checksum(layers));

  // Byte lengths follow from the shapes: 6 and 1 float32 values.
  std::vector<std::size_t> lengths;
  for_each_line(dir / "manifest.jsonl", [&](std::size_t n, std::string_view line) {
    Json rec = parse_record(line, "manifest", n);
    if (rec["record"] == "layer") lengths.push_back(rec["byte_length"].get<std::size_t>());
    if (rec["record"] == "dump") CHECK(rec["layer_count"] == 2);
  });
  CHECK(lengths == std::vector<std::size_t>{24, 4});
}

TEST_CASE("corrupted dumps are rejected") {
  TempDir dir;
  std::vector<LayerWeights> layers{layer("a", {4}, 1.0f), layer("b", {2}, 2.0f)};
  write_dump(dir.path(), layers);
  std::filesystem::path bin;
  for (auto& e : std::filesystem::directory_iterator(dir.path())) {
    if (e.path().extension() == ".bin") bin = e.path();
  }
  {
    std::fstream f(bin, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(0);
    f.put('\x7f');
  }
  CHECK_THROWS_AS(read_dump(dir.path()), DataError);
  CHECK_THROWS_AS(read_dump(dir / "missing"), DataError);
}

TEST_CASE("drift report: locality and missing layers") {
  std::vector<LayerWeights> before{layer("a", {4}, 1.0f), layer("b", {4}, 1.0f), layer("c", {4}, 1.0f)};
  auto after = before;
  after[1] = shifted(after[1], 0.5f);
  auto report = drift_report(before, after);
  REQUIRE(report.layers.size() == 3);
  CHECK(report.layers[0].drift == 0.0);
  CHECK(report.layers[1].drift == doctest::Approx(0.25));
  CHECK(report.layers[2].drift == 0.0);

  auto same = drift_report(before, before);
  CHECK(same.summary.min == 0.0);
  CHECK(same.summary.max == 0.0);

  auto short_after = after;
  short_after.pop_back();
  try {
    drift_report(before, short_after);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("'c'") != std::string::npos);
  }
  try {
    drift_report(short_after, before);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("'c'") != std::string::npos);
  }
}

TEST_CASE("12-layer quartiles, worked by hand") {
  // Layer i has 4 elements shifted by eps_i, so F_i = eps_i / 2.
  const std::vector<float> eps{0.5f, 0.125f, 1.0f, 0.0f, 0.25f, 2.0f, 0.75f, 0.375f, 1.5f, 0.0625f, 3.0f, 0.875f};
  // Sorted F: 0, .03125, .0625, .125, .1875, .25, .375, .4375, .5, .75, 1, 1.5
  // lower rule, n = 12: q1 -> index 2, median -> 5, q3 -> 8.
  std::vector<LayerWeights> before, after;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    before.push_back(layer("layer." + std::to_string(i), {2, 2}, 0.5f));
    after.push_back(shifted(before.back(), eps[i]));
  }
  auto report = drift_report(before, after);
  CHECK(report.summary.min == 0.0);
  CHECK(report.summary.q1 == 0.0625);
  CHECK(report.summary.median == 0.25);
  CHECK(report.summary.q3 == 0.5);
  CHECK(report.summary.max == 1.5);
  for (std::size_t i = 0; i < eps.size(); ++i) CHECK(report.layers[i].drift == eps[i] / 2.0);
}

TEST_CASE("box summary agrees with the lower-quantile oracle") {
  std::mt19937 gen(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t n : {1u, 2u, 3u, 7u, 10u, 25u}) {
    std::vector<double> xs(n);
    for (auto& x : xs) x = u(gen);
    auto s = box_summary(xs);
    CHECK(s.min == oracle::lower_quantile(xs, 0.0));
    CHECK(s.q1 == oracle::lower_quantile(xs, 0.25));
    CHECK(s.median == oracle::lower_quantile(xs, 0.5));
    CHECK(s.q3 == oracle::lower_quantile(xs, 0.75));
    CHECK(s.max == oracle::lower_quantile(xs, 1.0));
  }
}

TEST_CASE("block aggregation") {
  CHECK(block_key("encoder.layer.3.attention.q.weight") == "encoder.layer.3");
  CHECK(block_key("embeddings.word.weight") == "embeddings.word.weight");
  std::vector<LayerWeights> before{layer("enc.0.q", {4}, 0.0f), layer("enc.0.k", {12}, 0.0f),
                                   layer("enc.1.q", {4}, 0.0f)};
  auto after = before;
  after[0] = shifted(after[0], 1.0f);  // diff ss 4
  after[1] = shifted(after[1], 1.0f);  // diff ss 12
  DriftOptions opts;
  opts.blocks = true;
  auto report = drift_report(before, after, opts);
  REQUIRE(report.layers.size() == 2);
  CHECK(report.layers[0].name == "enc.0");
  CHECK(report.layers[0].element_count == 16);
  CHECK(report.layers[0].drift == doctest::Approx(4.0 / 16.0));
  CHECK(report.layers[1].drift == 0.0);
}

TEST_CASE("drift report from dump directories and csv output") {
  TempDir dir;
  std::vector<LayerWeights> before{layer("a", {4}, 1.0f), layer("b", {2, 2}, 1.0f)};
  auto after = before;
  after[0] = shifted(after[0], 0.5f);
  write_dump(dir / "before", before);
  write_dump(dir / "after", after);
  auto report = drift_report(dir / "before", dir / "after");
  std::string csv = drift_csv(report);
  CHECK(csv.rfind("layer,element_count,drift\n", 0) == 0);
  CHECK(csv.find("a,4,0.25\n") != std::string::npos);
  CHECK(csv.find("b,4,0\n") != std::string::npos);
}
