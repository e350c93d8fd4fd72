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

#ifndef TEXTCORR_LEXICON_H_
#define TEXTCORR_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "textcorr/pos_tag.h"

namespace textcorr {

using WordSet = std::set<std::string, std::less<>>;

// Contiguous character n-grams of `word`, in order. Empty if the word is
// shorter than n.
std::vector<std::string> letter_ngrams(std::string_view word, std::size_t n);

// N-gram orders a word of the given length (in characters) is indexed
// under: 1-2 -> {1}, 3 -> {2}, 4+ -> {2, 3}.
std::vector<std::size_t> index_orders(std::size_t length);

// A word list for one grammatical category (or GENERAL) with a letter n-gram
// index and a skeleton index. Immutable once built.
class Lexicon {
 public:
  using Index = std::unordered_map<std::string, std::vector<std::string>>;

  explicit Lexicon(LexiconLabel label = LexiconLabel::kGeneral)
      : label_(label) {}

  LexiconLabel label() const { return label_; }
  const WordSet& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(std::string_view word) const { return words_.contains(word); }

  const Index& ngram_index() const { return ngram_index_; }
  const Index& skeleton_index() const { return skeleton_index_; }

 private:
  friend Lexicon build_lexicon(const std::vector<std::string>&, LexiconLabel);

  LexiconLabel label_;
  WordSet words_;
  Index ngram_index_;
  Index skeleton_index_;
};

// Words are lowercased and NFC-composed; duplicates collapse. Throws
// ParseError (1-based position in `word_list`) for an empty word or one
// containing whitespace.
Lexicon build_lexicon(const std::vector<std::string>& word_list,
                      LexiconLabel label);

inline bool contains(const Lexicon& lex, std::string_view word) {
  return lex.contains(word);
}

// Union of the n-gram buckets for the word's letter n-grams (orders chosen
// by index_orders) and the bucket of its skeleton.
WordSet candidates_by_overlap(const Lexicon& lex, std::string_view word);

// One word per line.
Lexicon load_lexicon(const std::filesystem::path& path, LexiconLabel label);
void save_lexicon(const Lexicon& lex, const std::filesystem::path& path);

// "lex.<label>.txt"
std::string lexicon_file_name(LexiconLabel label);

// The GENERAL lexicon plus whichever category lexicons are loaded.
class LexiconSet {
 public:
  LexiconSet() = default;
  explicit LexiconSet(Lexicon general);

  void add(Lexicon lex);
  const Lexicon& general() const;
  const Lexicon* find(LexiconLabel label) const;
  bool has_all_categories() const;

  // Lexicon consulted for a word tagged `tag`; GENERAL when the tag is
  // absent, MISC, or its lexicon is not loaded.
  const Lexicon& for_tag(std::optional<PosTag> tag) const;

 private:
  std::map<LexiconLabel, Lexicon> lexicons_;
};

// Loads lex.general.txt and, with `categories`, every lex.<pos>.txt.
// Missing files raise IoError.
LexiconSet load_lexicon_dir(const std::filesystem::path& dir, bool categories);

}  // namespace textcorr

#endif  // TEXTCORR_LEXICON_H_
