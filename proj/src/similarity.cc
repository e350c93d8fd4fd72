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

#include "textcorr/similarity.h"

#include <algorithm>
#include <vector>

#include "textcorr/errors.h"
#include "textcorr/unicode.h"

namespace textcorr {

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Single row over the shorter string.
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[b.size()];
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  if (a == b) return 0;
  return edit_distance(unicode::decode(a), unicode::decode(b));
}

std::string skeleton(std::string_view word) {
  if (word.empty()) throw ContractViolation("skeleton of an empty word");
  std::u32string letters = unicode::decode(word);
  for (char32_t& c : letters) c = unicode::strip_diacritic(c);

  auto is_vowel = [](char32_t c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  };
  std::u32string key(1, letters[0]);
  std::u32string vowels;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    const char32_t c = letters[i];
    std::u32string& bucket = is_vowel(c) ? vowels : key;
    if (c != letters[0] && bucket.find(c) == std::u32string::npos) {
      bucket.push_back(c);
    }
  }
  key += vowels;
  return unicode::encode(key);
}

}  // namespace textcorr
