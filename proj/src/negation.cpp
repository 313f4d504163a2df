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

#include "negprobe/negation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "negprobe/error.hpp"
#include "negprobe/text.hpp"

namespace negprobe {
namespace {

struct Pair {
  std::string_view positive;
  std::string_view negative;
};

// Canonical forms produced by AddNegation. RemoveNegation also accepts the
// uncontracted "<aux> not" spelling of each.
constexpr std::array<Pair, 5> kCopulas{{
    {"is", "isn't"}, {"are", "aren't"}, {"was", "wasn't"}, {"were", "weren't"}, {"am", "am not"},
}};

constexpr std::array<Pair, 9> kModals{{
    {"can", "cannot"},
    {"could", "couldn't"},
    {"will", "won't"},
    {"would", "wouldn't"},
    {"shall", "shall not"},
    {"should", "shouldn't"},
    {"must", "mustn't"},
    {"may", "may not"},
    {"might", "might not"},
}};

// Extra negated spellings mapped to their positive auxiliary.
constexpr std::array<Pair, 3> kModalVariants{{
    {"can", "can't"}, {"shall", "shan't"}, {"might", "mightn't"},
}};

constexpr std::array<std::string_view, 3> kDoForms{"do", "does", "did"};

struct Irregular {
  std::string_view lemma;
  std::string_view past;
};

constexpr Irregular kIrregularPast[] = {
    {"be", "was"},        {"have", "had"},     {"do", "did"},       {"go", "went"},
    {"make", "made"},     {"take", "took"},    {"get", "got"},      {"give", "gave"},
    {"come", "came"},     {"see", "saw"},      {"know", "knew"},    {"eat", "ate"},
    {"drink", "drank"},   {"fly", "flew"},     {"run", "ran"},      {"grow", "grew"},
    {"find", "found"},    {"think", "thought"}, {"bring", "brought"}, {"buy", "bought"},
    {"hold", "held"},     {"keep", "kept"},    {"leave", "left"},   {"feel", "felt"},
    {"say", "said"},      {"tell", "told"},    {"write", "wrote"},  {"speak", "spoke"},
    {"break", "broke"},   {"build", "built"},  {"lose", "lost"},    {"sit", "sat"},
    {"stand", "stood"},   {"swim", "swam"},    {"sing", "sang"},    {"begin", "began"},
    {"fall", "fell"},     {"catch", "caught"}, {"teach", "taught"}, {"sleep", "slept"},
    {"wear", "wore"},     {"win", "won"},      {"put", "put"},      {"cut", "cut"},
    {"hit", "hit"},       {"let", "let"},      {"set", "set"},      {"read", "read"},
    {"become", "became"}, {"meet", "met"},     {"pay", "paid"},     {"send", "sent"},
    {"spend", "spent"},   {"lead", "led"},     {"feed", "fed"},     {"bite", "bit"},
    {"hide", "hid"},      {"drive", "drove"},  {"ride", "rode"},    {"rise", "rose"},
    {"throw", "threw"},   {"blow", "blew"},    {"draw", "drew"},    {"choose", "chose"},
    {"freeze", "froze"},  {"steal", "stole"},  {"forget", "forgot"}, {"understand", "understood"},
    {"sell", "sold"},     {"dig", "dug"},      {"shoot", "shot"},   {"fight", "fought"},
    {"seek", "sought"},   {"mean", "meant"},   {"hear", "heard"},   {"lay", "laid"},
    {"lie", "lay"},       {"swing", "swung"},  {"shake", "shook"},  {"wake", "woke"},
};

constexpr Irregular kIrregularThird[] = {
    {"be", "is"}, {"have", "has"}, {"do", "does"}, {"go", "goes"},
};

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::size_t vowel_groups(std::string_view s) {
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : s) {
    bool v = is_vowel(c) || (c == 'y' && in_group);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// One-syllable consonant-vowel-consonant ending, e.g. "stop", "plan".
bool doubles_final_consonant(std::string_view lemma) {
  if (lemma.size() < 3 || vowel_groups(lemma) != 1) return false;
  char last = lemma[lemma.size() - 1];
  char mid = lemma[lemma.size() - 2];
  char first = lemma[lemma.size() - 3];
  return !is_vowel(last) && last != 'w' && last != 'x' && last != 'y' && is_vowel(mid) &&
         !is_vowel(first);
}

// Stem shape that usually lost a silent "e" before "-ed", e.g. "us(e)d".
bool likely_silent_e(std::string_view stem) {
  if (stem.empty()) return false;
  char last = stem.back();
  if (last == 'v' || last == 'u' || last == 'c' || (last == 'z' && !ends_with(stem, "zz"))) {
    return true;
  }
  if (stem.size() < 2 || vowel_groups(stem) != 1) return false;
  char mid = stem[stem.size() - 2];
  bool single_vowel = is_vowel(mid) && (stem.size() == 2 || !is_vowel(stem[stem.size() - 3]));
  return single_vowel && !is_vowel(last) && last != 'w' && last != 'x' && last != 'y';
}

bool is_word_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '\'' || c == '-' ||
         (static_cast<unsigned char>(c) >= 0x80);
}

std::string lowercase_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  // Typographic apostrophe (U+2019) is matched like the ASCII one.
  for (std::size_t pos = out.find("\xE2\x80\x99"); pos != std::string::npos;
       pos = out.find("\xE2\x80\x99", pos)) {
    out.replace(pos, 3, "'");
  }
  return out;
}

struct Word {
  std::size_t start;
  std::size_t end;
  std::string lower;
};

struct VerbGroup {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<Word> words;
  bool capitalized = false;
};

// Next alphabetic word after `pos`, skipping spaces only.
std::optional<Word> next_word(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  while (i < text.size() && text[i] == ' ') ++i;
  if (i == pos || i >= text.size()) return std::nullopt;
  std::size_t start = i;
  while (i < text.size() && is_word_char(text[i])) ++i;
  if (i == start) return std::nullopt;
  return Word{start, i, lowercase_ascii(text.substr(start, i - start))};
}

template <std::size_t N>
const Pair* find_positive(const std::array<Pair, N>& table, std::string_view w) {
  for (const auto& p : table) {
    if (p.positive == w) return &p;
  }
  return nullptr;
}

template <std::size_t N>
const Pair* find_negative(const std::array<Pair, N>& table, std::string_view w) {
  for (const auto& p : table) {
    if (p.negative == w) return &p;
  }
  return nullptr;
}

bool is_auxiliary(std::string_view w) {
  return find_positive(kCopulas, w) || find_positive(kModals, w) ||
         std::find(kDoForms.begin(), kDoForms.end(), w) != kDoForms.end();
}

bool is_contracted_do(std::string_view w) {
  return w == "don't" || w == "doesn't" || w == "didn't";
}

VerbGroup extract_group(const ClozeRecord& record) {
  std::string_view text = record.text;
  VerbGroup group;
  std::size_t i = record.verb_span.start;
  while (i < record.verb_span.end) {
    while (i < record.verb_span.end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < record.verb_span.end && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      group.words.push_back(Word{start, i, lowercase_ascii(text.substr(start, i - start))});
    }
  }
  if (group.words.empty()) throw QueryNotNegatable("empty verb span: " + record.text);

  // Grow a bare auxiliary over a following "not", and a negated do over
  // the verb it supports.
  auto absorb = [&]() -> bool {
    const std::string& last = group.words.back().lower;
    auto next = next_word(text, group.words.back().end);
    if (!next) return false;
    if (is_auxiliary(last) && next->lower == "not") {
      group.words.push_back(*next);
      return true;
    }
    bool do_not = last == "not" && group.words.size() >= 2 &&
                  std::find(kDoForms.begin(), kDoForms.end(),
                            group.words[group.words.size() - 2].lower) != kDoForms.end();
    if ((do_not || is_contracted_do(last)) && next->lower != "not") {
      group.words.push_back(*next);
      return false;
    }
    return false;
  };
  while (absorb()) {
  }

  group.start = group.words.front().start;
  group.end = group.words.back().end;
  group.capitalized = std::isupper(static_cast<unsigned char>(text[group.start])) != 0;
  return group;
}

struct Rewrite {
  std::string replacement;
  std::string pos;
  std::string lemma;
};

std::string lemma_for(const ClozeRecord& record, std::string_view surface,
                      std::string (*from_surface)(std::string_view),
                      std::string (*inflect)(std::string_view)) {
  if (!record.verb_lemma.empty()) {
    if (inflect(record.verb_lemma) != surface) {
      throw QueryNotNegatable("lemma '" + record.verb_lemma + "' does not inflect to '" +
                              std::string(surface) + "'");
    }
    return record.verb_lemma;
  }
  std::string lemma = from_surface(surface);
  if (lemma.empty()) {
    throw QueryNotNegatable("cannot recover the lemma of '" + std::string(surface) + "'");
  }
  return lemma;
}

Rewrite add_negation(const ClozeRecord& record, const VerbGroup& group) {
  const auto& w = group.words;
  for (const auto& word : w) {
    if (word.lower == "not" || ends_with(word.lower, "n't") || word.lower == "cannot") {
      throw QueryNotNegatable("verb is already negated: " + record.text);
    }
  }
  if (w.size() == 1) {
    const std::string& verb = w[0].lower;
    if (const Pair* p = find_positive(kCopulas, verb)) {
      return {std::string(p->negative), record.verb_pos, {}};
    }
    if (const Pair* p = find_positive(kModals, verb)) {
      return {std::string(p->negative), record.verb_pos, {}};
    }
    const std::string& tag = record.verb_pos;
    if (tag == "VB" || tag == "VBP") {
      return {"don't " + verb, tag, verb};
    }
    if (tag == "VBZ") {
      std::string lemma = lemma_for(record, verb, morph::lemma_from_third_person, morph::third_person);
      return {"doesn't " + lemma, tag, lemma};
    }
    if (tag == "VBD") {
      std::string lemma = lemma_for(record, verb, morph::lemma_from_past, morph::past_tense);
      return {"didn't " + lemma, tag, lemma};
    }
    throw QueryNotNegatable("no negation rule for '" + verb + "' tagged '" + tag + "'");
  }
  if (w.size() == 2 && std::find(kDoForms.begin(), kDoForms.end(), w[0].lower) != kDoForms.end()) {
    return {w[0].lower + " not " + w[1].lower, record.verb_pos, w[1].lower};
  }
  throw QueryNotNegatable("verb group is not a single verb: " + record.text);
}

Rewrite remove_negation(const ClozeRecord& record, const VerbGroup& group) {
  const auto& w = group.words;
  if (w.size() == 1) {
    if (const Pair* p = find_negative(kCopulas, w[0].lower)) {
      return {std::string(p->positive), record.verb_pos, {}};
    }
    if (const Pair* p = find_negative(kModals, w[0].lower)) {
      return {std::string(p->positive), record.verb_pos, {}};
    }
    if (const Pair* p = find_negative(kModalVariants, w[0].lower)) {
      return {std::string(p->positive), record.verb_pos, {}};
    }
  }
  if (w.size() == 2 && w[1].lower == "not") {
    if (const Pair* p = find_positive(kCopulas, w[0].lower)) {
      return {std::string(p->positive), record.verb_pos, {}};
    }
    if (const Pair* p = find_positive(kModals, w[0].lower)) {
      return {std::string(p->positive), record.verb_pos, {}};
    }
  }
  if (w.size() == 2 && is_contracted_do(w[0].lower)) {
    const std::string& lemma = w[1].lower;
    if (w[0].lower == "don't") {
      std::string tag = record.verb_pos == "VB" ? "VB" : "VBP";
      return {lemma, tag, lemma};
    }
    if (w[0].lower == "doesn't") return {morph::third_person(lemma), "VBZ", lemma};
    return {morph::past_tense(lemma), "VBD", lemma};
  }
  if (w.size() == 3 && w[1].lower == "not" &&
      std::find(kDoForms.begin(), kDoForms.end(), w[0].lower) != kDoForms.end()) {
    return {w[0].lower + " " + w[2].lower, record.verb_pos, w[2].lower};
  }
  throw QueryNotNegatable("no negation expression to remove: " + record.text);
}

}  // namespace

namespace morph {

std::string third_person(std::string_view lemma) {
  for (const auto& irr : kIrregularThird) {
    if (irr.lemma == lemma) return std::string(irr.past);
  }
  std::string s(lemma);
  if (s.size() >= 2 && s.back() == 'y' && !is_vowel(s[s.size() - 2])) {
    return s.substr(0, s.size() - 1) + "ies";
  }
  if (ends_with(s, "s") || ends_with(s, "x") || ends_with(s, "z") || ends_with(s, "ch") ||
      ends_with(s, "sh") || ends_with(s, "o")) {
    return s + "es";
  }
  return s + "s";
}

std::string past_tense(std::string_view lemma) {
  for (const auto& irr : kIrregularPast) {
    if (irr.lemma == lemma) return std::string(irr.past);
  }
  std::string s(lemma);
  if (ends_with(s, "e")) return s + "d";
  if (s.size() >= 2 && s.back() == 'y' && !is_vowel(s[s.size() - 2])) {
    return s.substr(0, s.size() - 1) + "ied";
  }
  if (doubles_final_consonant(s)) return s + s.back() + "ed";
  return s + "ed";
}

std::string lemma_from_third_person(std::string_view surface) {
  for (const auto& irr : kIrregularThird) {
    if (irr.past == surface) return std::string(irr.lemma);
  }
  std::string s(surface);
  std::vector<std::string> candidates;
  if (ends_with(s, "ies") && s.size() > 4) candidates.push_back(s.substr(0, s.size() - 3) + "y");
  if (ends_with(s, "s") && s.size() > 1) {
    std::string strip_s = s.substr(0, s.size() - 1);
    if (ends_with(s, "es")) {
      std::string stem = s.substr(0, s.size() - 2);
      bool sibilant = ends_with(stem, "x") || ends_with(stem, "zz") || ends_with(stem, "ch") ||
                      ends_with(stem, "sh") || ends_with(stem, "ss") || ends_with(stem, "o");
      if (sibilant) {
        candidates.push_back(stem);
        candidates.push_back(strip_s);
      } else {
        candidates.push_back(strip_s);
        candidates.push_back(stem);
      }
    } else {
      candidates.push_back(strip_s);
    }
  }
  for (const auto& c : candidates) {
    if (!c.empty() && third_person(c) == s) return c;
  }
  return {};
}

std::string lemma_from_past(std::string_view surface) {
  for (const auto& irr : kIrregularPast) {
    if (irr.past == surface && irr.lemma != "be") return std::string(irr.lemma);
  }
  std::string s(surface);
  std::vector<std::string> candidates;
  if (ends_with(s, "ied") && s.size() > 4) candidates.push_back(s.substr(0, s.size() - 3) + "y");
  if (ends_with(s, "ed") && s.size() > 3) {
    std::string stem = s.substr(0, s.size() - 2);
    if (stem.size() >= 2 && stem.back() == stem[stem.size() - 2]) {
      candidates.push_back(stem.substr(0, stem.size() - 1));
    }
    if (likely_silent_e(stem)) {
      candidates.push_back(stem + "e");
      candidates.push_back(stem);
    } else {
      candidates.push_back(stem);
      candidates.push_back(stem + "e");
    }
  }
  for (const auto& c : candidates) {
    if (!c.empty() && past_tense(c) == s) return c;
  }
  return {};
}

}  // namespace morph

ClozeRecord negate_record(const ClozeRecord& record, NegationDirection direction) {
  record.validate();
  VerbGroup group = extract_group(record);
  Rewrite rw = direction == NegationDirection::AddNegation ? add_negation(record, group)
                                                           : remove_negation(record, group);
  if (group.capitalized && !rw.replacement.empty()) {
    rw.replacement[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(rw.replacement[0])));
  }

  ClozeRecord out = record;
  out.text = record.text.substr(0, group.start) + rw.replacement + record.text.substr(group.end);
  out.verb_span = Span{group.start, group.start + rw.replacement.size()};
  out.verb_pos = rw.pos;
  out.verb_lemma = rw.lemma;
  return out;
}

std::string negate_query(const ClozeRecord& record, NegationDirection direction) {
  return negate_record(record, direction).text;
}

}  // namespace negprobe
