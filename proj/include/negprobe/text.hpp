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

#include <string>
#include <string_view>
#include <vector>

namespace negprobe {

// Placeholder token marking the cloze slot in every query text.
inline constexpr std::string_view kMaskToken = "[MASK]";

// Strips leading and trailing ASCII whitespace.
std::string_view trim(std::string_view s);

// Canonical word form used for every membership test in the toolkit:
// Unicode NFC, full lowercase, surrounding whitespace removed.
// Throws DataError on invalid UTF-8.
std::string normalize_word(std::string_view s);

std::vector<std::string> split(std::string_view s, char delim);
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Number of non-overlapping occurrences of `needle` in `haystack`.
std::size_t count_occurrences(std::string_view haystack, std::string_view needle);

// True when the entry contains no whitespace or underscore separators.
bool is_single_token(std::string_view word);

// Conversions between code point offsets and byte offsets in UTF-8 text.
// Throw DataError when the offset lies past the end of the text.
std::size_t utf8_byte_offset(std::string_view text, std::size_t codepoint_offset);
std::size_t utf8_codepoint_offset(std::string_view text, std::size_t byte_offset);

}  // namespace negprobe
