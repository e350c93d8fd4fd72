// Copyright 2026 The textcorr Authors
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

// Word similarity measures used for candidate generation and ranking.

#ifndef TEXTCORR_SIMILARITY_H_
#define TEXTCORR_SIMILARITY_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace textcorr {

// Levenshtein distance over Unicode scalar values (unit cost insertion,
// deletion and substitution).
std::size_t edit_distance(std::string_view a, std::string_view b);
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);

// Skeleton key: first character, then the remaining distinct consonants in
// first-occurrence order, then the remaining distinct vowels (a, e, i, o, u)
// in first-occurrence order. Diacritics are stripped first, so "ñandú" and
// "nandu" share a key. Non-letters count as consonants.
//
//   skeleton("informatics") == "infrmtcsoa"
//
// Throws ContractViolation for an empty word.
std::string skeleton(std::string_view word);

}  // namespace textcorr

#endif  // TEXTCORR_SIMILARITY_H_
