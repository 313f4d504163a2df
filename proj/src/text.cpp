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

#include "negprobe/text.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>

#include "negprobe/error.hpp"

namespace negprobe {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ascii(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

}  // namespace

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string normalize_word(std::string_view s) {
  s = trim(s);
  if (is_ascii(s)) {
    std::string out(s);
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw DataError("ICU NFC normalizer unavailable");

  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  if (text.indexOf(static_cast<UChar>(0xFFFD)) >= 0 &&
      std::string_view(s).find("\xEF\xBF\xBD") == std::string_view::npos) {
    throw DataError("invalid UTF-8 in word: " + std::string(s));
  }
  text.toLower(icu::Locale::getRoot());
  icu::UnicodeString composed = nfc->normalize(text, status);
  if (U_FAILURE(status)) throw DataError("NFC normalization failed for: " + std::string(s));
  composed.trim();

  std::string out;
  composed.toUTF8String(out);
  return out;
}

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      break;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) words.emplace_back(s.substr(start, i - start));
  }
  return words;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::size_t count_occurrences(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return 0;
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

bool is_single_token(std::string_view word) {
  if (word.empty()) return false;
  return std::none_of(word.begin(), word.end(),
                      [](char c) { return is_space(c) || c == '_'; });
}

std::size_t utf8_byte_offset(std::string_view text, std::size_t codepoint_offset) {
  std::size_t bytes = 0;
  for (std::size_t cp = 0; cp < codepoint_offset; ++cp) {
    if (bytes >= text.size()) {
      throw DataError("character offset " + std::to_string(codepoint_offset) +
                      " is past the end of the text");
    }
    auto lead = static_cast<unsigned char>(text[bytes]);
    std::size_t len = lead < 0x80 ? 1 : lead < 0xE0 ? 2 : lead < 0xF0 ? 3 : 4;
    bytes += len;
  }
  if (bytes > text.size()) throw DataError("character offset splits a code point");
  return bytes;
}

std::size_t utf8_codepoint_offset(std::string_view text, std::size_t byte_offset) {
  if (byte_offset > text.size()) throw DataError("byte offset past the end of the text");
  std::size_t cps = 0;
  for (std::size_t i = 0; i < byte_offset; ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++cps;
  }
  return cps;
}

}  // namespace negprobe
