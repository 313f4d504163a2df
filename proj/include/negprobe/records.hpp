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

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace negprobe {

using Json = nlohmann::json;

// Opens `path` for reading or throws DataError naming the path.
std::string read_file(const std::filesystem::path& path);

// Calls `fn(line_number, line)` for every non-blank line that is not a
// `#` comment. Line numbers are 1-based.
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::size_t, std::string_view)>& fn);

// Parses one JSON object record; errors carry the path and line number.
Json parse_record(std::string_view line, const std::filesystem::path& path,
                  std::size_t line_number);

// Field accessors for records. Missing or mistyped required fields throw
// DataError; unknown fields are ignored.
std::string require_string(const Json& rec, std::string_view field);
std::string optional_string(const Json& rec, std::string_view field,
                            std::string_view fallback = {});

// Serializes a record on one line with sorted keys.
std::string dump_record(const Json& rec);

// Writes through a sibling temp file and renames, so readers never see a
// partial file. Parent directories are created.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace negprobe
