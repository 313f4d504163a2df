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

#include "negprobe/records.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "negprobe/error.hpp"
#include "negprobe/text.hpp"

namespace negprobe {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::size_t, std::string_view)>& fn) {
  if (std::filesystem::is_directory(path)) {
    throw DataError("expected a file but found a directory: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read file: " + path.string());
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    fn(line_number, view);
  }
}

Json parse_record(std::string_view line, const std::filesystem::path& path,
                  std::size_t line_number) {
  Json rec = Json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (rec.is_discarded() || !rec.is_object()) {
    throw DataError(path.string() + ":" + std::to_string(line_number) +
                    ": not a JSON object record");
  }
  return rec;
}

std::string require_string(const Json& rec, std::string_view field) {
  auto it = rec.find(field);
  if (it == rec.end() || !it->is_string()) {
    throw DataError("record is missing string field '" + std::string(field) + "'");
  }
  return it->get<std::string>();
}

std::string optional_string(const Json& rec, std::string_view field,
                            std::string_view fallback) {
  auto it = rec.find(field);
  if (it == rec.end() || it->is_null()) return std::string(fallback);
  if (!it->is_string()) {
    throw DataError("field '" + std::string(field) + "' must be a string");
  }
  return it->get<std::string>();
}

std::string dump_record(const Json& rec) {
  return rec.dump(-1, ' ', /*ensure_ascii=*/false, Json::error_handler_t::strict);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw DataError("cannot create directory: " + path.parent_path().string());
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write file: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw DataError("short write: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw DataError("cannot move output into place: " + path.string());
  }
}

}  // namespace negprobe
