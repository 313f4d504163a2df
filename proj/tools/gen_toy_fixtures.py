#!/usr/bin/env python3
# Copyright 2026 The negprobe Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the toy fixtures under tests/fixtures.

The cloze rows carry hand-written expectations (negated text, expected
outcome, wrong sets). Tests compare the library against those annotations,
so edit them by hand rather than regenerating from library output.

Usage: tools/gen_toy_fixtures.py [--out tests/fixtures]
"""

import argparse
import json
import pathlib
import re

# ---------------------------------------------------------------- cloze

# (text, verb, pos, answer, head, relation, negated)
RELATION_EXAMPLES = [
    ("Truth is a [MASK].", "is", "VBZ", "fact", "truth", "IsA", "Truth isn't a [MASK]."),
    ("A doctor can [MASK] you.", "can", "MD", "care", "doctor", "CapableOf", "A doctor cannot [MASK] you."),
    ("England is part of the [MASK].", "is", "VBZ", "europe", "england", "PartOf",
     "England isn't part of the [MASK]."),
    ("Apples have [MASK] inside them.", "have", "VBP", "seeds", "apple", "HasA",
     "Apples don't have [MASK] inside them."),
    ("A map is for [MASK].", "is", "VBZ", "navigate", "map", "UsedFor", "A map isn't for [MASK]."),
    ("Air has [MASK].", "has", "VBZ", "molecules", "air", "MadeOf", "Air doesn't have [MASK]."),
    ("Soldier does not want to be [MASK].", "does", "VBZ", "die", "soldier", "NotDesires",
     "Soldier does want to be [MASK]."),
]

# Round-trip set. polarity says which direction applies first.
# (text, verb, pos, polarity, flipped, lemma)
PATTERNS = [
    # copula
    ("A dog is [MASK].", "is", "VBZ", "positive", "A dog isn't [MASK].", ""),
    ("Dogs are [MASK].", "are", "VBP", "positive", "Dogs aren't [MASK].", ""),
    ("The king was [MASK].", "was", "VBD", "positive", "The king wasn't [MASK].", ""),
    ("The kings were [MASK].", "were", "VBD", "positive", "The kings weren't [MASK].", ""),
    ("I am a [MASK].", "am", "VBP", "positive", "I am not a [MASK].", ""),
    ("Is [MASK] a color?", "Is", "VBZ", "positive", "Isn't [MASK] a color?", ""),
    ("A cat isn't a [MASK].", "isn't", "VBZ", "negative", "A cat is a [MASK].", ""),
    ("Cats aren't [MASK].", "aren't", "VBP", "negative", "Cats are [MASK].", ""),
    ("The road wasn't [MASK].", "wasn't", "VBD", "negative", "The road was [MASK].", ""),
    ("The roads weren't [MASK].", "weren't", "VBD", "negative", "The roads were [MASK].", ""),
    ("I am not a [MASK].", "am", "VBP", "negative", "I am a [MASK].", ""),
    # modal
    ("A bird can [MASK].", "can", "MD", "positive", "A bird cannot [MASK].", ""),
    ("A baby could [MASK].", "could", "MD", "positive", "A baby couldn't [MASK].", ""),
    ("A dog will [MASK] at night.", "will", "MD", "positive", "A dog won't [MASK] at night.", ""),
    ("A teacher would [MASK] children.", "would", "MD", "positive", "A teacher wouldn't [MASK] children.", ""),
    ("A king shall [MASK] the land.", "shall", "MD", "positive", "A king shall not [MASK] the land.", ""),
    ("A knife should [MASK] bread.", "should", "MD", "positive", "A knife shouldn't [MASK] bread.", ""),
    ("A student must [MASK] hard.", "must", "MD", "positive", "A student mustn't [MASK] hard.", ""),
    ("A cow may [MASK] grass.", "may", "MD", "positive", "A cow may not [MASK] grass.", ""),
    ("A horse might [MASK] fast.", "might", "MD", "positive", "A horse might not [MASK] fast.", ""),
    ("Can [MASK] swim?", "Can", "MD", "positive", "Cannot [MASK] swim?", ""),
    ("A fish cannot [MASK].", "cannot", "MD", "negative", "A fish can [MASK].", ""),
    ("A cat won't [MASK].", "won't", "MD", "negative", "A cat will [MASK].", ""),
    ("A pig couldn't [MASK].", "couldn't", "MD", "negative", "A pig could [MASK].", ""),
    ("A lamb may not [MASK].", "may not", "MD", "negative", "A lamb may [MASK].", ""),
    # do-support
    ("Apples have [MASK] inside them.", "have", "VBP", "positive", "Apples don't have [MASK] inside them.", ""),
    ("Eat [MASK] every day.", "Eat", "VB", "positive", "Don't eat [MASK] every day.", ""),
    ("Air has [MASK].", "has", "VBZ", "positive", "Air doesn't have [MASK].", ""),
    ("A chef cooks [MASK].", "cooks", "VBZ", "positive", "A chef doesn't cook [MASK].", ""),
    ("A bee carries [MASK].", "carries", "VBZ", "positive", "A bee doesn't carry [MASK].", ""),
    ("A school teaches [MASK].", "teaches", "VBZ", "positive", "A school doesn't teach [MASK].", ""),
    ("A fish possesses [MASK].", "possesses", "VBZ", "positive", "A fish doesn't possess [MASK].", ""),
    ("A mouse goes to [MASK].", "goes", "VBZ", "positive", "A mouse doesn't go to [MASK].", ""),
    ("Paper comes from [MASK].", "comes", "VBZ", "positive", "Paper doesn't come from [MASK].", ""),
    ("A man does [MASK] daily.", "does", "VBZ", "positive", "A man doesn't do [MASK] daily.", ""),
    ("A bird flies to [MASK].", "flies", "VBZ", "positive", "A bird doesn't fly to [MASK].", "fly"),
    ("A house had [MASK].", "had", "VBD", "positive", "A house didn't have [MASK].", ""),
    ("The cook baked [MASK].", "baked", "VBD", "positive", "The cook didn't bake [MASK].", ""),
    ("The boy played [MASK].", "played", "VBD", "positive", "The boy didn't play [MASK].", ""),
    ("The baby cried for [MASK].", "cried", "VBD", "positive", "The baby didn't cry for [MASK].", ""),
    ("The car stopped at [MASK].", "stopped", "VBD", "positive", "The car didn't stop at [MASK].", ""),
    ("The bird flew to [MASK].", "flew", "VBD", "positive", "The bird didn't fly to [MASK].", ""),
    ("People used [MASK].", "used", "VBD", "positive", "People didn't use [MASK].", ""),
    ("A cat doesn't like [MASK].", "doesn't", "VBZ", "negative", "A cat likes [MASK].", ""),
    ("People don't want [MASK].", "don't", "VBP", "negative", "People want [MASK].", ""),
    ("Students didn't want [MASK].", "didn't", "VBD", "negative", "Students wanted [MASK].", ""),
    ("A mouse doesn't go near [MASK].", "doesn't go", "VBZ", "negative", "A mouse goes near [MASK].", ""),
    ("Don't touch [MASK].", "Don't", "VB", "negative", "Touch [MASK].", ""),
    # emphatic do
    ("Plants do need [MASK].", "do need", "VBP", "positive", "Plants do not need [MASK].", ""),
    ("A clock did have [MASK].", "did have", "VBD", "positive", "A clock did not have [MASK].", ""),
    ("Soldier does not want to be [MASK].", "does", "VBZ", "negative", "Soldier does want to be [MASK].", ""),
    ("Children do not like [MASK].", "do not like", "VBP", "negative", "Children do like [MASK].", ""),
    # non-ASCII before the verb
    ("Café is a [MASK].", "is", "VBZ", "positive", "Café isn't a [MASK].", ""),
    ("Crème brûlée has [MASK].", "has", "VBZ", "positive", "Crème brûlée doesn't have [MASK].", ""),
]

# Snapshot for build_mkr_nq. expect is "emit", a build drop reason, or
# "skip:<reason>" for rows rejected at ingestion.
# (id, text, verb, pos, answer, head, relation, expect, negated, wrong)
SNAPSHOT = [
    ("snap-001", "Truth is a [MASK].", "is", "VBZ", "fact", "truth", "IsA", "emit",
     "Truth isn't a [MASK].", ["fact", "statement", "concept", "actuality"]),
    ("snap-002", "A cat is a [MASK].", "is", "VBZ", "animal", "cat", "IsA", "emit",
     "A cat isn't a [MASK].", ["animal", "pet", "mammal"]),
    ("snap-003", "Dogs are [MASK].", "are", "VBP", "animals", "dog", "IsA", "emit",
     "Dogs aren't [MASK].", ["animals", "pets"]),
    ("snap-004", "A rose is a [MASK].", "is", "VBZ", "flower", "rose", "IsA", "emit",
     "A rose isn't a [MASK].", ["flower"]),
    ("snap-005", "Café is a [MASK].", "is", "VBZ", "place", "café", "IsA", "emit",
     "Café isn't a [MASK].", ["place", "restaurant"]),
    ("snap-006", "The sun is a [MASK].", "is", "VBZ", "star", "sun", "IsA", "emit",
     "The sun isn't a [MASK].", ["star"]),
    ("snap-007", "Gold was a [MASK] once.", "was", "VBD", "currency", "gold", "IsA", "emit",
     "Gold wasn't a [MASK] once.", ["currency", "metal"]),
    ("snap-008", "Whales were [MASK] once.", "were", "VBD", "fish", "whale", "IsA", "emit",
     "Whales weren't [MASK] once.", ["fish", "mammals"]),
    ("snap-009", "I am a [MASK].", "am", "VBP", "person", "i", "IsA", "emit",
     "I am not a [MASK].", ["person"]),
    ("snap-010", "A piano is an [MASK].", "is", "VBZ", "instrument", "piano", "IsA", "emit",
     "A piano isn't an [MASK].", ["instrument"]),
    ("snap-011", "A doctor can [MASK] you.", "can", "MD", "care", "doctor", "CapableOf", "emit",
     "A doctor cannot [MASK] you.", ["care"]),
    ("snap-012", "A bird can [MASK].", "can", "MD", "fly", "bird", "CapableOf", "emit",
     "A bird cannot [MASK].", ["fly", "sing"]),
    ("snap-013", "Fish can [MASK].", "can", "MD", "swim", "fish", "CapableOf", "emit",
     "Fish cannot [MASK].", ["swim"]),
    ("snap-014", "A dog will [MASK] at strangers.", "will", "MD", "bark", "dog", "CapableOf", "emit",
     "A dog won't [MASK] at strangers.", ["bark", "bite"]),
    ("snap-015", "A baby could [MASK] at night.", "could", "MD", "cry", "baby", "CapableOf", "emit",
     "A baby couldn't [MASK] at night.", ["cry"]),
    ("snap-016", "A knife should [MASK] bread.", "should", "MD", "cut", "knife", "CapableOf", "emit",
     "A knife shouldn't [MASK] bread.", ["cut"]),
    ("snap-017", "A student must [MASK] hard.", "must", "MD", "study", "student", "CapableOf", "emit",
     "A student mustn't [MASK] hard.", ["study", "learn"]),
    ("snap-018", "A cow may [MASK] grass.", "may", "MD", "eat", "cow", "CapableOf", "emit",
     "A cow may not [MASK] grass.", ["eat"]),
    ("snap-019", "A horse might [MASK] fast.", "might", "MD", "run", "horse", "CapableOf", "emit",
     "A horse might not [MASK] fast.", ["run", "gallop"]),
    ("snap-020", "A teacher would [MASK] children.", "would", "MD", "teach", "teacher", "CapableOf", "emit",
     "A teacher wouldn't [MASK] children.", ["teach"]),
    ("snap-021", "A king shall [MASK] the land.", "shall", "MD", "rule", "king", "CapableOf", "emit",
     "A king shall not [MASK] the land.", ["rule"]),
    ("snap-022", "Bees make [MASK].", "make", "VBP", "honey", "bee", "CapableOf", "emit",
     "Bees don't make [MASK].", ["honey"]),
    ("snap-023", "A chef cooks [MASK].", "cooks", "VBZ", "food", "chef", "CapableOf", "emit",
     "A chef doesn't cook [MASK].", ["food"]),
    ("snap-024", "England is part of the [MASK].", "is", "VBZ", "europe", "england", "PartOf", "emit",
     "England isn't part of the [MASK].", ["europe"]),
    ("snap-025", "A wheel is part of a [MASK].", "is", "VBZ", "car", "wheel", "PartOf", "emit",
     "A wheel isn't part of a [MASK].", ["car", "bicycle"]),
    ("snap-026", "Fingers are part of the [MASK].", "are", "VBP", "hand", "finger", "PartOf", "emit",
     "Fingers aren't part of the [MASK].", ["hand"]),
    ("snap-027", "A page is part of a [MASK].", "is", "VBZ", "book", "page", "PartOf", "emit",
     "A page isn't part of a [MASK].", ["book"]),
    ("snap-028", "The heart was part of the [MASK].", "was", "VBD", "body", "heart", "PartOf", "emit",
     "The heart wasn't part of the [MASK].", ["body"]),
    ("snap-029", "Apples have [MASK] inside them.", "have", "VBP", "seeds", "apple", "HasA", "emit",
     "Apples don't have [MASK] inside them.", ["stems", "seeds"]),
    ("snap-030", "A car has [MASK].", "has", "VBZ", "wheels", "car", "HasA", "emit",
     "A car doesn't have [MASK].", ["wheels", "engine"]),
    ("snap-031", "Birds have [MASK].", "have", "VBP", "feathers", "bird", "HasA", "emit",
     "Birds don't have [MASK].", ["feathers", "wings"]),
    ("snap-032", "A tree has [MASK].", "has", "VBZ", "leaves", "tree", "HasA", "emit",
     "A tree doesn't have [MASK].", ["leaves", "roots"]),
    ("snap-033", "A house had [MASK].", "had", "VBD", "rooms", "house", "HasA", "emit",
     "A house didn't have [MASK].", ["rooms"]),
    ("snap-034", "People own [MASK].", "own", "VBP", "houses", "people", "HasA", "emit",
     "People don't own [MASK].", ["houses"]),
    ("snap-035", "A cat has [MASK].", "has", "VBZ", "fur", "cat", "HasA", "emit",
     "A cat doesn't have [MASK].", ["fur", "claws"]),
    ("snap-036", "A book contains [MASK].", "contains", "VBZ", "pages", "book", "HasA", "emit",
     "A book doesn't contain [MASK].", ["pages"]),
    ("snap-037", "A fish possesses [MASK].", "possesses", "VBZ", "gills", "fish", "HasA", "emit",
     "A fish doesn't possess [MASK].", ["gills", "fins"]),
    ("snap-038", "A bee carries [MASK].", "carries", "VBZ", "pollen", "bee", "HasA", "emit",
     "A bee doesn't carry [MASK].", ["pollen"]),
    ("snap-039", "A box holds [MASK].", "holds", "VBZ", "items", "box", "HasA", "emit",
     "A box doesn't hold [MASK].", ["items"]),
    ("snap-040", "A school teaches [MASK].", "teaches", "VBZ", "lessons", "school", "HasA", "emit",
     "A school doesn't teach [MASK].", ["lessons", "teachers"]),
    ("snap-041", "A map is for [MASK].", "is", "VBZ", "navigate", "map", "UsedFor", "emit",
     "A map isn't for [MASK].", ["navigate", "locating", "navigating", "orienteering", "information"]),
    ("snap-042", "A pen is used for [MASK].", "is", "VBZ", "writing", "pen", "UsedFor", "emit",
     "A pen isn't used for [MASK].", ["writing"]),
    ("snap-043", "Knives are for [MASK].", "are", "VBP", "cutting", "knife", "UsedFor", "emit",
     "Knives aren't for [MASK].", ["cutting"]),
    ("snap-044", "A bed is for [MASK].", "is", "VBZ", "sleeping", "bed", "UsedFor", "emit",
     "A bed isn't for [MASK].", ["sleeping", "resting"]),
    ("snap-045", "A cup was used for [MASK].", "was", "VBD", "drinking", "cup", "UsedFor", "emit",
     "A cup wasn't used for [MASK].", ["drinking"]),
    ("snap-046", "People use a key to [MASK] doors.", "use", "VBP", "open", "key", "UsedFor", "emit",
     "People don't use a key to [MASK] doors.", ["open", "lock"]),
    ("snap-047", "A chair is for [MASK].", "is", "VBZ", "sitting", "chair", "UsedFor", "emit",
     "A chair isn't for [MASK].", ["sitting"]),
    ("snap-048", "Soap is for [MASK].", "is", "VBZ", "washing", "soap", "UsedFor", "emit",
     "Soap isn't for [MASK].", ["washing", "cleaning"]),
    ("snap-049", "Air has [MASK].", "has", "VBZ", "molecules", "air", "MadeOf", "emit",
     "Air doesn't have [MASK].", ["molecules"]),
    ("snap-050", "A table is made of [MASK].", "is", "VBZ", "wood", "table", "MadeOf", "emit",
     "A table isn't made of [MASK].", ["wood"]),
    ("snap-051", "Bread is made from [MASK].", "is", "VBZ", "flour", "bread", "MadeOf", "emit",
     "Bread isn't made from [MASK].", ["flour", "wheat"]),
    ("snap-052", "Windows are made of [MASK].", "are", "VBP", "glass", "window", "MadeOf", "emit",
     "Windows aren't made of [MASK].", ["glass"]),
    ("snap-053", "Ice is made of [MASK].", "is", "VBZ", "water", "ice", "MadeOf", "emit",
     "Ice isn't made of [MASK].", ["water"]),
    ("snap-054", "A shirt is made of [MASK].", "is", "VBZ", "cotton", "shirt", "MadeOf", "emit",
     "A shirt isn't made of [MASK].", ["cotton"]),
    ("snap-055", "Coins contain [MASK].", "contain", "VBP", "metal", "coin", "MadeOf", "emit",
     "Coins don't contain [MASK].", ["metal"]),
    ("snap-056", "Paper comes from [MASK].", "comes", "VBZ", "wood", "paper", "MadeOf", "emit",
     "Paper doesn't come from [MASK].", ["wood", "trees"]),
    ("snap-057", "Soldier does not want to be [MASK].", "does", "VBZ", "die", "soldier", "NotDesires", "emit",
     "Soldier does want to be [MASK].", ["die"]),
    ("snap-058", "A cat doesn't like [MASK].", "doesn't", "VBZ", "water", "cat", "NotDesires", "emit",
     "A cat likes [MASK].", ["water", "baths"]),
    ("snap-059", "People don't want [MASK].", "don't", "VBP", "pain", "people", "NotDesires", "emit",
     "People want [MASK].", ["pain", "war"]),
    ("snap-060", "Children do not like [MASK].", "do not like", "VBP", "vegetables", "child", "NotDesires",
     "emit", "Children do like [MASK].", ["vegetables"]),
    ("snap-061", "A dog doesn't want to [MASK].", "doesn't want", "VBZ", "bathe", "dog", "NotDesires", "emit",
     "A dog wants to [MASK].", ["bathe"]),
    ("snap-062", "A patient does not wish for [MASK].", "does", "VBZ", "pain", "patient", "NotDesires",
     "emit", "A patient does wish for [MASK].", ["pain"]),
    ("snap-063", "Teachers don't enjoy [MASK].", "don't", "VBP", "noise", "teacher", "NotDesires", "emit",
     "Teachers enjoy [MASK].", ["noise"]),
    ("snap-064", "A mouse doesn't go near [MASK].", "doesn't", "VBZ", "cats", "mouse", "NotDesires", "emit",
     "A mouse goes near [MASK].", ["cats"]),
    ("snap-065", "Students didn't want [MASK].", "didn't", "VBD", "homework", "student", "NotDesires", "emit",
     "Students wanted [MASK].", ["homework", "exams"]),
    ("snap-066", "Plants do need [MASK].", "do need", "VBP", "water", "plant", "HasA", "emit",
     "Plants do not need [MASK].", ["water"]),
    ("snap-067", "A clock did have [MASK].", "did have", "VBD", "hands", "clock", "HasA", "emit",
     "A clock did not have [MASK].", ["hands"]),
    # relation outside the whitelist
    ("snap-068", "Happy is a synonym of [MASK].", "is", "VBZ", "glad", "happy", "Synonym",
     "relation_not_whitelisted", "", []),
    ("snap-069", "Big is the opposite of [MASK].", "is", "VBZ", "small", "big", "Antonym",
     "relation_not_whitelisted", "", []),
    ("snap-070", "Fast means [MASK].", "means", "VBZ", "quick", "fast", "Synonym",
     "relation_not_whitelisted", "", []),
    ("snap-071", "Hot is an antonym of [MASK].", "is", "VBZ", "cold", "hot", "Antonym",
     "relation_not_whitelisted", "", []),
    # no rule applies
    ("snap-072", "A cat isn't a [MASK].", "isn't", "VBZ", "dog", "cat", "IsA", "not_negatable", "", []),
    ("snap-073", "A baby cannot [MASK].", "cannot", "MD", "talk", "baby", "CapableOf", "not_negatable", "", []),
    ("snap-074", "Swimming fish love [MASK].", "Swimming", "VBG", "water", "fish", "HasA", "not_negatable",
     "", []),
    ("snap-075", "Nobody wants [MASK].", "wants", "VBZ", "pain", "nobody", "NotDesires", "not_negatable",
     "", []),
    ("snap-076", "A bird flies to [MASK].", "flies", "VBZ", "south", "bird", "CapableOf", "not_negatable",
     "", []),  # verb_lemma "flee" does not inflect to "flies"
    ("snap-077", "The dog slunk to [MASK].", "slunk", "VBD", "bed", "dog", "CapableOf", "not_negatable",
     "", []),
    ("snap-078", "The child was not [MASK].", "was", "VBD", "happy", "child", "IsA", "not_negatable", "", []),
    ("snap-079", "A cow won't [MASK].", "won't", "MD", "fly", "cow", "CapableOf", "not_negatable", "", []),
    ("snap-080", "Soldiers want to be [MASK].", "want", "VBP", "heroes", "soldier", "NotDesires",
     "not_negatable", "", []),
    ("snap-081", "A map shows [MASK].", "shows", "NN", "roads", "map", "UsedFor", "not_negatable", "", []),
    # nothing in the knowledge base for (head, relation)
    ("snap-082", "A violin is an [MASK].", "is", "VBZ", "instrument", "violin", "IsA", "empty_wrong_set", "", []),
    ("snap-083", "A cat can [MASK].", "can", "MD", "purr", "cat", "CapableOf", "empty_wrong_set", "", []),
    ("snap-084", "Water is part of the [MASK].", "is", "VBZ", "sea", "water", "PartOf", "empty_wrong_set", "", []),
    ("snap-085", "A lamp has [MASK].", "has", "VBZ", "bulbs", "lamp", "HasA", "empty_wrong_set", "", []),
    ("snap-086", "A spoon is for [MASK].", "is", "VBZ", "eating", "spoon", "UsedFor", "empty_wrong_set", "", []),
    ("snap-087", "A rope is made of [MASK].", "is", "VBZ", "hemp", "rope", "MadeOf", "empty_wrong_set", "", []),
    ("snap-088", "A lion doesn't want [MASK].", "doesn't", "VBZ", "grass", "lion", "NotDesires",
     "empty_wrong_set", "", []),
    ("snap-089", "Truth is part of [MASK].", "is", "VBZ", "life", "truth", "PartOf", "empty_wrong_set", "", []),
    # id already used earlier in the file
    ("snap-002", "A kitten is a [MASK].", "is", "VBZ", "cat", "cat", "IsA", "duplicate_id", "", []),
    ("snap-012", "Birds can [MASK].", "can", "MD", "sing", "bird", "CapableOf", "duplicate_id", "", []),
    # no id: the builder numbers them by input position
    (None, "A lemon is [MASK].", "is", "VBZ", "sour", "lemon", "IsA", "emit",
     "A lemon isn't [MASK].", ["fruit"]),
    (None, "A spider has [MASK].", "has", "VBZ", "legs", "spider", "HasA", "emit",
     "A spider doesn't have [MASK].", ["legs"]),
    (None, "A hammer is for [MASK].", "is", "VBZ", "hitting", "hammer", "UsedFor", "emit",
     "A hammer isn't for [MASK].", ["hitting", "nails"]),
    (None, "A mirror is made of [MASK].", "is", "VBZ", "glass", "mirror", "MadeOf", "emit",
     "A mirror isn't made of [MASK].", ["glass"]),
]

# Rejected by load_cloze. Kept last so builder indices match file order.
SNAPSHOT_INVALID = [
    ('{"id": "snap-bad-1", "text": "A [MASK] is a [MASK].", "answer": "dog", "head": "dog", '
     '"relation": "IsA", "verb_span": [10, 12], "verb_pos": "VBZ", "expect": "skip:invalid_record"}'),
    ('{"id": "snap-bad-2", "text": "A dog is in the [MASK].", "answer": "house", "head": "dog", '
     '"relation": "AtLocation", "verb_span": [6, 8], "verb_pos": "VBZ", "expect": "skip:unknown_relation"}'),
    ('{"id": "snap-bad-3", "text": "A dog is [MASK].", "answer": "loyal", "head": "dog", '
     '"relation": "IsA", "verb_span": [40, 42], "verb_pos": "VBZ", "expect": "skip:invalid_record"}'),
    '{"id": "snap-bad-4", "text": "A dog is [MASK]."',
]

# Extra triples under other relations, so relation matching is exercised.
SNAPSHOT_DISTRACTORS = [
    ("truth", "Antonym", "lie"),
    ("water", "IsA", "liquid"),
    ("violin", "UsedFor", "music"),
    ("lamp", "UsedFor", "light"),
    ("spoon", "MadeOf", "metal"),
    ("rope", "UsedFor", "climbing"),
    ("lion", "IsA", "cat"),
]


def verb_span(text, verb):
    m = re.search(r"(?<![\w'])" + re.escape(verb) + r"(?![\w'])", text)
    if not m:
        raise SystemExit(f"verb {verb!r} not found in {text!r}")
    return [m.start(), m.end()]  # code points


def cloze_line(rec):
    return json.dumps(rec, ensure_ascii=False, sort_keys=True)


def write_lines(path, lines):
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def cloze_files(out):
    lines = []
    for text, verb, pos, answer, head, rel, negated in RELATION_EXAMPLES:
        lines.append(cloze_line({"text": text, "verb_span": verb_span(text, verb), "verb_pos": pos,
                                 "answer": answer, "head": head, "relation": rel, "negated": negated}))
    write_lines(out / "cloze_relations.jsonl", lines)

    lines = []
    for i, (text, verb, pos, polarity, flipped, lemma) in enumerate(PATTERNS):
        rec = {"id": f"pat-{i:03d}", "text": text, "verb_span": verb_span(text, verb), "verb_pos": pos,
               "answer": "x", "head": "x", "relation": "IsA", "polarity": polarity, "flipped": flipped}
        if lemma:
            rec["verb_lemma"] = lemma
        lines.append(cloze_line(rec))
    write_lines(out / "cloze_patterns.jsonl", lines)

    lines, triples = [], []
    for index, (rid, text, verb, pos, answer, head, rel, expect, negated, wrong) in enumerate(SNAPSHOT):
        rec = {"text": text, "verb_span": verb_span(text, verb), "verb_pos": pos, "answer": answer,
               "head": head, "relation": rel, "expect": expect}
        if rid is not None:
            rec["id"] = rid
        else:
            rec["expect_id"] = f"mkrnq-{index:06d}"
        if rid == "snap-076":
            rec["verb_lemma"] = "flee"
        if expect == "emit":
            rec["negated"] = negated
            rec["wrong"] = sorted(wrong)
            triples += [(head, rel, w) for w in wrong]
        lines.append(cloze_line(rec))
    lines += SNAPSHOT_INVALID
    write_lines(out / "cloze_snapshot.jsonl", lines)

    triples += SNAPSHOT_DISTRACTORS
    # Rows that fail negation still have a non-empty lookup, so the counted
    # reason is the negation failure. Most heads are covered by emit rows.
    triples += [("nobody", "NotDesires", "pain"), ("child", "IsA", "happy"), ("happy", "Synonym", "glad")]
    seen, rows = set(), []
    for t in triples:
        if t not in seen:
            seen.add(t)
            rows.append("\t".join(t))
    write_lines(out / "snapshot_triples.tsv", ["# head\trelation\ttail"] + rows)

# ---------------------------------------------------------------- lexicon

# word -> (pos, count, synonyms, antonyms)
LEXICON = {
    "boy": ("noun", 120, ["brat", "man", "lad"], ["girl", "sister"]),
    "learning": ("noun", 40, ["knowledge", "erudition", "eruditeness"], ["forgetting", "teaching"]),
    "speaker": ("noun", 33, ["loudspeaker", "transducer", "talker"], ["microphone", "listener", "addressee"]),
    "happy": ("adj", 812, ["glad", "cheerful"], ["sad", "unhappy"]),
    "fast": ("adv", 60, ["quickly", "rapidly"], ["slowly"]),
    "big": ("adj", 300, ["large", "huge"], ["small", "little"]),
    "scarce": ("adj", 6, ["rare"], ["plentiful"]),
    "dark": ("adj", 45, [], ["light"]),
    "quiet": ("adj", 70, ["silent"], []),
}

EXTRA_TRIPLES = [
    ("big", "Synonym", "great"), ("big", "Antonym", "great"),   # listed both ways: excluded
    ("happy", "Synonym", "on cloud nine"),                      # multi-word: filtered
    ("rare", "Synonym", "uncommon"), ("rare", "Antonym", "common"),
    ("the", "Synonym", "a"), ("the", "Antonym", "an"),
    ("run", "Synonym", "sprint"), ("run", "Antonym", "walk"),
]

EXTRA_FREQUENCIES = [
    ("rare", "adj", 5),        # not more than five
    ("the", "other", 99999),    # wrong part of speech
    ("run", "verb", 500),
    ("bad", "adj", -1),         # rejected at ingestion
    ("boy", "adj", 7),          # second tag: the noun reading wins
]


def lexicon_files(out):
    rows = []
    for word, (_, _, syn, ant) in LEXICON.items():
        rows += [f"{word}\tSynonym\t{s}" for s in syn]
        rows += [f"{word}\tAntonym\t{a}" for a in ant]
    rows += ["\t".join(t) for t in EXTRA_TRIPLES]
    rows += ["\t".join(t) for t in RELATION_TRIPLES]
    write_lines(out / "lexicon.tsv", ["# head\trelation\ttail"] + rows)

    freq = [f"{w}\t{pos}\t{count}" for w, (pos, count, _, _) in LEXICON.items()]
    freq += [f"{w}\t{pos}\t{count}" for w, pos, count in EXTRA_FREQUENCIES]
    write_lines(out / "frequencies.tsv", ["# word\tpos\tcount"] + freq)


RELATION_TRIPLES = [
    ("truth", "IsA", t) for t in ["fact", "statement", "concept", "actuality"]
] + [("doctor", "CapableOf", "care"), ("england", "PartOf", "Europe")] + [
    ("apple", "HasA", t) for t in ["stems", "seeds"]
] + [("map", "UsedFor", t) for t in ["navigate", "locating", "navigating", "orienteering", "information"]] + [
    ("air", "MadeOf", "molecules"), ("soldier", "NotDesires", "die"),
]

# ---------------------------------------------------------------- SAR pool

ONSETS = ["b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z"]
NUCLEI = ["a", "e", "i", "o", "u"]


def pseudo_word(i):
    syllables = [o + n for o in ONSETS for n in NUCLEI]  # 70
    a, b = divmod(i, len(syllables))
    c, a = divmod(a, len(syllables))
    return syllables[a] + syllables[b] + "n" * (c + 1)


def sar_pool(out):
    rows = []
    for i in range(200):
        rows.append(f"{pseudo_word(2 * i)}\tAntonym\t{pseudo_word(2 * i + 1)}")
    for i in range(400):
        rows.append(f"{pseudo_word(1000 + 2 * i)}\tSynonym\t{pseudo_word(1000 + 2 * i + 1)}")
    # Same pair under both labels: dropped by the builder.
    rows.append(f"{pseudo_word(0)}\tSynonym\t{pseudo_word(1)}")
    write_lines(out / "sar_pool.tsv", ["# 200 antonym and 400 synonym pairs, one conflicting"] + rows)

# ---------------------------------------------------------------- definitions

GENUS = ["a tool", "a place", "an animal", "a feeling", "a plant", "a tradition", "a sound", "a colour",
         "a vehicle", "a garment"]
DIFFERENTIA = ["used at night", "found near rivers", "known for its smell", "made by hand",
               "common in the north", "shared at festivals", "that grows slowly", "kept indoors",
               "seen only in winter", "with a bright surface"]


def definitions(out):
    words = [pseudo_word(3000 + 7 * i) for i in range(100)]
    defs = {w: f"{GENUS[i % 10]} {DIFFERENTIA[(i * 3 + i // 10) % 10]}, kind {i}" for i, w in enumerate(words)}
    a = words[:60]
    b = words[50:]
    lines = []
    for w in a:
        lines.append(json.dumps({"word": w, "definition": defs[w]}, sort_keys=True))
    write_lines(out / "definitions_a.jsonl", lines)
    rows = ["# word\tdefinition"]
    for i, w in enumerate(b):
        text = defs[w] if w not in a else f"also {GENUS[(i + 4) % 10]} in older usage"
        rows.append(f"{w}\t{text}")
    write_lines(out / "definitions_b.tsv", rows)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cloze_files(out)
    lexicon_files(out)
    sar_pool(out)
    definitions(out)


if __name__ == "__main__":
    main()
