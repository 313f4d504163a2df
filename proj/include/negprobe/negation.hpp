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

// Rule-based negation of single-verb cloze sentences.
//
// The rule table is closed:
//   copula       is/are/was/were/am   <-> isn't/aren't/wasn't/weren't/am not
//   modal        can/will/could/...   <-> cannot/won't/couldn't/...
//   do-support   V (VB/VBP)           <-> don't V
//                V-s (VBZ)            <-> doesn't V
//                V-ed (VBD)           <-> didn't V
//   emphatic do  do/does/did V        <-> do/does/did not V
// The verb span selects the rule; the relation plays no part. Only the
// verb group is rewritten, every other byte of the text is preserved.

#include <string>
#include <string_view>

#include "negprobe/corpus.hpp"

namespace negprobe {

enum class NegationDirection { AddNegation, RemoveNegation };

// Returns the record with its text, verb span, and tag rewritten so the
// result can be negated again. Throws QueryNotNegatable when no rule applies.
ClozeRecord negate_record(const ClozeRecord& record, NegationDirection direction);

// Text-only form of negate_record.
std::string negate_query(const ClozeRecord& record, NegationDirection direction);

// English verb morphology used by do-support.
namespace morph {

std::string third_person(std::string_view lemma);
std::string past_tense(std::string_view lemma);
// Lemma candidates are accepted only when they re-inflect to the surface
// form; empty string when no candidate does.
std::string lemma_from_third_person(std::string_view surface);
std::string lemma_from_past(std::string_view surface);

}  // namespace morph

}  // namespace negprobe
