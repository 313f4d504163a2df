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

#include "negprobe/drift.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <optional>
#include <span>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "negprobe/checksum.hpp"
#include "negprobe/error.hpp"
#include "negprobe/records.hpp"
#include "negprobe/text.hpp"

namespace negprobe {
namespace {

constexpr std::string_view kFormat = "negprobe-f32";

std::string shape_string(const std::vector<std::int64_t>& shape) {
  std::string s;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(shape[i]);
  }
  return s;
}

std::string to_le_bytes(const std::vector<float>& values) {
  std::string bytes(values.size() * sizeof(float), '\0');
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto bits = std::bit_cast<std::uint32_t>(values[i]);
    for (int b = 0; b < 4; ++b) bytes[i * 4 + b] = static_cast<char>((bits >> (8 * b)) & 0xFF);
  }
  return bytes;
}

std::vector<float> from_le_bytes(std::string_view bytes) {
  std::vector<float> values(bytes.size() / 4);
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint32_t bits = 0;
    for (int b = 0; b < 4; ++b) {
      bits |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[i * 4 + b])) << (8 * b);
    }
    values[i] = std::bit_cast<float>(bits);
  }
  return values;
}

// Layer file names keep the tensor name readable but filesystem-safe.
std::string layer_file_name(std::size_t index, const std::string& name) {
  std::string safe;
  for (char c : name) {
    safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-') ? c : '_';
  }
  char prefix[16];
  std::snprintf(prefix, sizeof prefix, "%05zu_", index);
  return prefix + safe + ".bin";
}

void check_compatible(const LayerWeights& before, const LayerWeights& after) {
  if (before.layer_name != after.layer_name) {
    throw DataError("layer name mismatch: '" + before.layer_name + "' vs '" + after.layer_name + "'");
  }
  if (before.shape != after.shape) {
    throw DataError("shape mismatch for layer '" + before.layer_name + "': [" +
                    shape_string(before.shape) + "] vs [" + shape_string(after.shape) + "]");
  }
  before.validate();
  after.validate();
}

double sum_squared_difference(std::span<const float> a, std::span<const float> b) {
  double ss = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    ss += d * d;
  }
  return ss;
}

double sum_squares(std::span<const float> a) {
  double ss = 0.0;
  for (float v : a) ss += static_cast<double>(v) * static_cast<double>(v);
  return ss;
}

}  // namespace

void LayerWeights::validate() const {
  if (shape.empty()) throw DataError("layer '" + layer_name + "' has an empty shape");
  std::int64_t product = 1;
  for (std::int64_t d : shape) {
    if (d <= 0) throw DataError("layer '" + layer_name + "' has a non-positive dimension");
    product *= d;
  }
  if (static_cast<std::size_t>(product) != values.size()) {
    throw DataError("layer '" + layer_name + "' has " + std::to_string(values.size()) +
                    " values for shape [" + shape_string(shape) + "]");
  }
}

double frobenius_drift(const LayerWeights& before, const LayerWeights& after,
                       DriftNormalization norm) {
  check_compatible(before, after);
  double diff = std::sqrt(sum_squared_difference(before.values, after.values));
  if (norm == DriftNormalization::Relative) {
    double base = std::sqrt(sum_squares(before.values));
    if (base == 0.0) {
      throw DataError("relative drift undefined for all-zero layer '" + before.layer_name + "'");
    }
    return diff / base;
  }
  return diff / static_cast<double>(before.element_count());
}

std::string dump_checksum(const std::vector<LayerWeights>& layers) {
  Sha256 h;
  for (const auto& layer : layers) {
    h.update(layer.layer_name);
    h.update(std::string_view("\0", 1));
    h.update(shape_string(layer.shape));
    h.update(std::string_view("\0", 1));
    h.update(to_le_bytes(layer.values));
  }
  return h.hex_digest();
}

void write_dump(const std::filesystem::path& dir, const std::vector<LayerWeights>& layers) {
  std::set<std::string> names;
  for (const auto& layer : layers) {
    layer.validate();
    if (!names.insert(layer.layer_name).second) {
      throw DataError("duplicate layer name in dump: " + layer.layer_name);
    }
  }
  std::string manifest = dump_record(Json{{"record", "dump"},
                                          {"format", kFormat},
                                          {"version", 1},
                                          {"layer_count", layers.size()},
                                          {"checksum", dump_checksum(layers)}}) +
                         "\n";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& layer = layers[i];
    std::string file = layer_file_name(i, layer.layer_name);
    std::string bytes = to_le_bytes(layer.values);
    write_file_atomic(dir / file, bytes);
    manifest += dump_record(Json{{"record", "layer"},
                                 {"layer_name", layer.layer_name},
                                 {"shape", layer.shape},
                                 {"file", file},
                                 {"offset", 0},
                                 {"byte_length", bytes.size()}}) +
                "\n";
  }
  write_file_atomic(dir / "manifest.jsonl", manifest);
}

std::vector<LayerWeights> read_dump(const std::filesystem::path& dir) {
  const auto manifest_path = dir / "manifest.jsonl";
  if (!std::filesystem::exists(manifest_path)) {
    throw DataError("weight dump has no manifest: " + manifest_path.string());
  }
  std::string checksum;
  std::optional<std::size_t> declared_count;
  std::vector<LayerWeights> layers;
  std::map<std::string, std::string> file_cache;

  for_each_line(manifest_path, [&](std::size_t line_number, std::string_view line) {
    Json rec = parse_record(line, manifest_path, line_number);
    std::string kind = require_string(rec, "record");
    if (kind == "dump") {
      if (optional_string(rec, "format") != kFormat) {
        throw DataError(manifest_path.string() + ": unsupported dump format");
      }
      checksum = require_string(rec, "checksum");
      declared_count = rec.value("layer_count", std::size_t{0});
      return;
    }
    if (kind != "layer") return;

    LayerWeights layer;
    layer.layer_name = require_string(rec, "layer_name");
    auto shape = rec.find("shape");
    if (shape == rec.end() || !shape->is_array()) {
      throw DataError("layer '" + layer.layer_name + "' has no shape");
    }
    for (const auto& d : *shape) {
      if (!d.is_number_integer()) throw DataError("layer '" + layer.layer_name + "': bad shape");
      layer.shape.push_back(d.get<std::int64_t>());
    }
    std::string file = require_string(rec, "file");
    auto offset = rec.value("offset", std::size_t{0});
    auto length = rec.value("byte_length", std::size_t{0});

    auto cached = file_cache.find(file);
    if (cached == file_cache.end()) {
      cached = file_cache.emplace(file, read_file(dir / file)).first;
    }
    const std::string& bytes = cached->second;
    if (length % 4 != 0 || offset + length > bytes.size()) {
      throw DataError("layer '" + layer.layer_name + "': byte range outside " + file);
    }
    layer.values = from_le_bytes(std::string_view(bytes).substr(offset, length));
    layer.validate();
    layers.push_back(std::move(layer));
  });

  if (checksum.empty()) throw DataError(manifest_path.string() + ": missing dump header record");
  if (declared_count && *declared_count != layers.size()) {
    throw DataError(manifest_path.string() + ": header declares " + std::to_string(*declared_count) +
                    " layers, found " + std::to_string(layers.size()));
  }
  if (dump_checksum(layers) != checksum) {
    throw DataError("checksum mismatch for weight dump " + dir.string());
  }
  return layers;
}

BoxSummary box_summary(std::vector<double> values) {
  if (values.empty()) return {};
  std::sort(values.begin(), values.end());
  auto at = [&](double q) {
    auto idx = static_cast<std::size_t>(std::floor(q * static_cast<double>(values.size() - 1)));
    return values[idx];
  };
  return BoxSummary{values.front(), at(0.25), at(0.5), at(0.75), values.back()};
}

std::string block_key(const std::string& layer_name) {
  std::vector<std::string> parts = split(layer_name, '.');
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (!p.empty() && std::all_of(p.begin(), p.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return join(std::vector<std::string>(parts.begin(), parts.begin() + i + 1), ".");
    }
  }
  return layer_name;
}

DriftReport drift_report(const std::vector<LayerWeights>& before,
                         const std::vector<LayerWeights>& after, const DriftOptions& options) {
  std::map<std::string, const LayerWeights*> after_by_name;
  for (const auto& layer : after) after_by_name[layer.layer_name] = &layer;
  std::set<std::string> before_names;
  for (const auto& layer : before) {
    before_names.insert(layer.layer_name);
    if (!after_by_name.count(layer.layer_name)) {
      throw DataError("layer '" + layer.layer_name + "' is missing from the second dump");
    }
  }
  for (const auto& layer : after) {
    if (!before_names.count(layer.layer_name)) {
      throw DataError("layer '" + layer.layer_name + "' is missing from the first dump");
    }
  }

  DriftReport report;
  if (!options.blocks) {
    for (const auto& layer : before) {
      const LayerWeights& other = *after_by_name.at(layer.layer_name);
      report.layers.push_back(
          {layer.layer_name, layer.element_count(), frobenius_drift(layer, other, options.norm)});
    }
  } else {
    struct Acc {
      std::size_t count = 0;
      double diff_ss = 0.0;
      double base_ss = 0.0;
    };
    std::vector<std::string> order;
    std::map<std::string, Acc> acc;
    for (const auto& layer : before) {
      const LayerWeights& other = *after_by_name.at(layer.layer_name);
      check_compatible(layer, other);
      std::string key = block_key(layer.layer_name);
      if (!acc.count(key)) order.push_back(key);
      Acc& a = acc[key];
      a.count += layer.element_count();
      a.diff_ss += sum_squared_difference(layer.values, other.values);
      a.base_ss += sum_squares(layer.values);
    }
    for (const auto& key : order) {
      const Acc& a = acc[key];
      double diff = std::sqrt(a.diff_ss);
      double value;
      if (options.norm == DriftNormalization::Relative) {
        if (a.base_ss == 0.0) throw DataError("relative drift undefined for all-zero block " + key);
        value = diff / std::sqrt(a.base_ss);
      } else {
        value = diff / static_cast<double>(a.count);
      }
      report.layers.push_back({key, a.count, value});
    }
  }

  std::vector<double> values;
  for (const auto& l : report.layers) values.push_back(l.drift);
  report.summary = box_summary(std::move(values));
  return report;
}

DriftReport drift_report(const std::filesystem::path& before_dir,
                         const std::filesystem::path& after_dir, const DriftOptions& options) {
  return drift_report(read_dump(before_dir), read_dump(after_dir), options);
}

std::string drift_csv(const DriftReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "layer,element_count,drift\n";
  for (const auto& l : report.layers) {
    std::string name = l.name;
    if (name.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : name) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      name = quoted + "\"";
    }
    out << name << ',' << l.element_count << ',' << l.drift << '\n';
  }
  return out.str();
}

}  // namespace negprobe
