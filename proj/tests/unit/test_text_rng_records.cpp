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

#include <array>
#include <set>
#include <span>
#include <vector>

#include "doctest.h"
#include "negprobe/checksum.hpp"
#include "negprobe/error.hpp"
#include "negprobe/records.hpp"
#include "negprobe/rng.hpp"
#include "negprobe/text.hpp"
#include "test_support.hpp"

using namespace negprobe;
using negprobe::testing::TempDir;
using negprobe::testing::read_text;
using negprobe::testing::write_text;

TEST_CASE("normalize_word trims, lowercases and composes") {
  CHECK(normalize_word("  Boy \t") == "boy");
  CHECK(normalize_word("EUROPE") == "europe");
  // e + combining acute composes to U+00E9
  CHECK(normalize_word("Cafe\xCC\x81") == "caf\xC3\xA9");
  CHECK(normalize_word("CAF\xC3\x89") == "caf\xC3\xA9");
  CHECK(normalize_word("") == "");
  CHECK_THROWS_AS(normalize_word("bad\xFF"), DataError);
}

TEST_CASE("split and join") {
  CHECK(split("a,b,,c", ',') == std::vector<std::string>{"a", "b", "", "c"});
  CHECK(split_whitespace("  a  b\tc ") == std::vector<std::string>{"a", "b", "c"});
  CHECK(join({"x", "y", "z"}, "; ") == "x; y; z");
  CHECK(count_occurrences("[MASK] and [MASK]", kMaskToken) == 2);
  CHECK(count_occurrences("none", kMaskToken) == 0);
}

TEST_CASE("single token entries") {
  CHECK(is_single_token("boy"));
  CHECK(is_single_token("well-being"));
  CHECK_FALSE(is_single_token("on cloud nine"));
  CHECK_FALSE(is_single_token("ice_cream"));
  CHECK_FALSE(is_single_token(""));
}

TEST_CASE("utf8 offsets") {
  std::string text = "Caf\xC3\xA9 is";
  CHECK(utf8_byte_offset(text, 5) == 6);
  CHECK(utf8_codepoint_offset(text, 6) == 5);
  CHECK(utf8_byte_offset(text, 7) == text.size());
  CHECK_THROWS_AS(utf8_byte_offset(text, 8), DataError);
}

TEST_CASE("rng is deterministic and bounded") {
  Rng a(99), b(99), c(100);
  std::vector<std::uint64_t> xs, ys, zs;
  for (int i = 0; i < 50; ++i) {
    xs.push_back(a.below(17));
    ys.push_back(b.below(17));
    zs.push_back(c.below(17));
  }
  CHECK(xs == ys);
  CHECK(xs != zs);
  for (auto x : xs) CHECK(x < 17);

  std::vector<int> items{0, 1, 2, 3, 4, 5, 6, 7};
  Rng r(5);
  r.shuffle(std::span(items));
  CHECK(std::set<int>(items.begin(), items.end()).size() == 8);
}

TEST_CASE("rng below is unbiased enough on small bounds") {
  Rng r(1);
  std::array<int, 3> counts{};
  for (int i = 0; i < 30000; ++i) ++counts[r.below(3)];
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
}

TEST_CASE("derive_seed separates keys") {
  CHECK(derive_seed(1, "boy") == derive_seed(1, "boy"));
  CHECK(derive_seed(1, "boy") != derive_seed(1, "boys"));
  CHECK(derive_seed(1, "boy") != derive_seed(2, "boy"));
}

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  Sha256 h;
  h.update(std::string_view("a"));
  h.update(std::string_view("bc"));
  CHECK(h.hex_digest() == sha256_hex("abc"));
}

TEST_CASE("line reader skips blanks and comments") {
  TempDir dir;
  write_text(dir / "f.txt", "# header\n\nfirst\r\n  \nsecond\n");
  std::vector<std::pair<std::size_t, std::string>> seen;
  for_each_line(dir / "f.txt", [&](std::size_t n, std::string_view line) { seen.emplace_back(n, line); });
  REQUIRE(seen.size() == 2);
  CHECK(seen[0] == std::make_pair(std::size_t{3}, std::string("first")));
  CHECK(seen[1] == std::make_pair(std::size_t{5}, std::string("second")));
}

TEST_CASE("missing file error names the path") {
  try {
    read_file("/nonexistent/where.jsonl");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/where.jsonl") != std::string::npos);
  }
}

TEST_CASE("records: sorted keys, unknown fields tolerated") {
  Json rec = parse_record(R"({"b": 1, "a": "x", "extra": [1, 2]})", "mem", 1);
  CHECK(dump_record(rec) == R"({"a":"x","b":1,"extra":[1,2]})");
  CHECK(require_string(rec, "a") == "x");
  CHECK(optional_string(rec, "missing", "dflt") == "dflt");
  CHECK_THROWS_AS(require_string(rec, "b"), DataError);
  CHECK_THROWS_AS(parse_record("{not json", "mem", 3), DataError);
  CHECK_THROWS_AS(parse_record("[1, 2]", "mem", 3), DataError);
}

TEST_CASE("atomic write creates parents and leaves no temp file") {
  TempDir dir;
  auto target = dir / "a/b/out.jsonl";
  write_file_atomic(target, "one\n");
  write_file_atomic(target, "two\n");
  CHECK(read_text(target) == "two\n");
  std::size_t entries = 0;
  for (auto& e : std::filesystem::directory_iterator(target.parent_path())) {
    (void)e;
    ++entries;
  }
  CHECK(entries == 1);
}
