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

// Per-layer parameter drift between two weight snapshots.
//
// Dump layout (one directory per snapshot):
//   manifest.jsonl  first record  {"record":"dump","format":"negprobe-f32","version":1,
//                                  "layer_count":N,"checksum":"<sha256>"}
//                   then per layer {"record":"layer","layer_name":...,"shape":[...],
//                                  "file":"...","offset":0,"byte_length":...}
//   *.bin           raw little-endian float32, row-major
// The checksum is SHA-256 over, for every layer in manifest order, the
// layer name, a NUL, the shape as comma-separated decimals, a NUL, and
// the raw bytes.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace negprobe {

struct LayerWeights {
  std::string layer_name;
  std::vector<std::int64_t> shape;
  std::vector<float> values;

  // Throws DataError unless shape is non-empty with positive dimensions
  // whose product equals values.size().
  void validate() const;
  std::size_t element_count() const { return values.size(); }
};

enum class DriftNormalization {
  ElementCount,  // ||before - after||_F / |M|
  Relative,      // ||before - after||_F / ||before||_F
};

// Throws DataError on mismatched names or shapes. Squares accumulate in
// double precision.
double frobenius_drift(const LayerWeights& before, const LayerWeights& after,
                       DriftNormalization norm = DriftNormalization::ElementCount);

void write_dump(const std::filesystem::path& dir, const std::vector<LayerWeights>& layers);
// Verifies shapes, byte lengths and the whole-dump checksum.
std::vector<LayerWeights> read_dump(const std::filesystem::path& dir);
std::string dump_checksum(const std::vector<LayerWeights>& layers);

struct BoxSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

// Quantile q of sorted values at index floor(q * (n - 1)), so the median
// of an even-length list is its lower middle element.
BoxSummary box_summary(std::vector<double> values);

struct LayerDrift {
  std::string name;
  std::size_t element_count = 0;
  double drift = 0.0;
};

struct DriftReport {
  std::vector<LayerDrift> layers;  // manifest order of the `before` dump
  BoxSummary summary;
};

struct DriftOptions {
  DriftNormalization norm = DriftNormalization::ElementCount;
  // Merge tensors into blocks keyed by their name up to the first numeric
  // component ("encoder.layer.3.attention.q.weight" -> "encoder.layer.3").
  bool blocks = false;
};

std::string block_key(const std::string& layer_name);

DriftReport drift_report(const std::vector<LayerWeights>& before,
                         const std::vector<LayerWeights>& after, const DriftOptions& options = {});
DriftReport drift_report(const std::filesystem::path& before_dir,
                         const std::filesystem::path& after_dir, const DriftOptions& options = {});

// Plot-ready CSV: header "layer,element_count,drift" then one row per layer.
std::string drift_csv(const DriftReport& report);

}  // namespace negprobe
