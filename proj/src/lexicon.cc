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

#include "textcorr/lexicon.h"

#include <algorithm>

#include "textcorr/errors.h"
#include "textcorr/io.h"
#include "textcorr/similarity.h"
#include "textcorr/unicode.h"

namespace textcorr {

std::vector<std::string> letter_ngrams(std::string_view word, std::size_t n) {
  if (n == 0) throw ContractViolation("letter_ngrams needs n >= 1");
  const std::u32string chars = unicode::decode(word);
  std::vector<std::string> grams;
  if (chars.size() < n) return grams;
  grams.reserve(chars.size() - n + 1);
  for (std::size_t i = 0; i + n <= chars.size(); ++i) {
    grams.push_back(unicode::encode(std::u32string_view(chars).substr(i, n)));
  }
  return grams;
}

std::vector<std::size_t> index_orders(std::size_t length) {
  if (length <= 2) return {1};
  if (length == 3) return {2};
  return {2, 3};
}

Lexicon build_lexicon(const std::vector<std::string>& word_list,
                      LexiconLabel label) {
  Lexicon lex(label);
  for (std::size_t i = 0; i < word_list.size(); ++i) {
    const std::string& raw = word_list[i];
    const std::u32string chars = unicode::decode(raw);
    if (chars.empty()) throw ParseError(i + 1, "empty word");
    if (std::any_of(chars.begin(), chars.end(), unicode::is_space)) {
      throw ParseError(i + 1, "word contains whitespace");
    }
    lex.words_.insert(unicode::to_nfc(unicode::lowercase(raw)));
  }
  // Sorted iteration keeps every bucket sorted.
  for (const std::string& word : lex.words_) {
    for (std::size_t n : index_orders(unicode::length(word))) {
      std::vector<std::string> grams = letter_ngrams(word, n);
      std::sort(grams.begin(), grams.end());
      grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
      for (std::string& g : grams) lex.ngram_index_[std::move(g)].push_back(word);
    }
    lex.skeleton_index_[skeleton(word)].push_back(word);
  }
  return lex;
}

WordSet candidates_by_overlap(const Lexicon& lex, std::string_view word) {
  if (word.empty()) throw ContractViolation("candidates for an empty word");
  WordSet out;
  auto take = [&out](const Lexicon::Index& index, const std::string& key) {
    auto it = index.find(key);
    if (it != index.end()) out.insert(it->second.begin(), it->second.end());
  };
  for (std::size_t n : index_orders(unicode::length(word))) {
    for (const std::string& g : letter_ngrams(word, n)) {
      take(lex.ngram_index(), g);
    }
  }
  take(lex.skeleton_index(), skeleton(word));
  return out;
}

Lexicon load_lexicon(const std::filesystem::path& path, LexiconLabel label) {
  const std::string text = read_text_file(path);
  std::vector<std::string> words;
  for (std::string_view line : split_lines(text)) words.emplace_back(line);
  try {
    return build_lexicon(words, label);
  } catch (const ParseError& e) {
    throw e.in_file(path.string());
  }
}

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path) {
  std::string out;
  for (const std::string& w : lex.words()) {
    out += w;
    out.push_back('\n');
  }
  write_text_file(path, out);
}

std::string lexicon_file_name(LexiconLabel label) {
  return "lex." + std::string(label_name(label)) + ".txt";
}

LexiconSet::LexiconSet(Lexicon general) {
  if (general.label() != LexiconLabel::kGeneral) {
    throw ContractViolation("LexiconSet needs a GENERAL lexicon");
  }
  lexicons_.emplace(LexiconLabel::kGeneral, std::move(general));
}

void LexiconSet::add(Lexicon lex) {
  const LexiconLabel label = lex.label();
  lexicons_.insert_or_assign(label, std::move(lex));
}

const Lexicon& LexiconSet::general() const {
  auto it = lexicons_.find(LexiconLabel::kGeneral);
  if (it == lexicons_.end()) throw ContractViolation("no GENERAL lexicon");
  return it->second;
}

const Lexicon* LexiconSet::find(LexiconLabel label) const {
  auto it = lexicons_.find(label);
  return it == lexicons_.end() ? nullptr : &it->second;
}

bool LexiconSet::has_all_categories() const {
  return std::all_of(kAllLexiconLabels.begin(), kAllLexiconLabels.end(),
                     [this](LexiconLabel l) { return find(l) != nullptr; });
}

const Lexicon& LexiconSet::for_tag(std::optional<PosTag> tag) const {
  if (!tag) return general();
  const Lexicon* lex = find(lexicon_label_for(*tag));
  return lex != nullptr ? *lex : general();
}

LexiconSet load_lexicon_dir(const std::filesystem::path& dir, bool categories) {
  LexiconSet set(load_lexicon(dir / lexicon_file_name(LexiconLabel::kGeneral),
                              LexiconLabel::kGeneral));
  if (categories) {
    for (LexiconLabel label : kAllLexiconLabels) {
      if (label == LexiconLabel::kGeneral) continue;
      set.add(load_lexicon(dir / lexicon_file_name(label), label));
    }
  }
  return set;
}

}  // namespace textcorr
