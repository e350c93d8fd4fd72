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

// Count-based word and POS-tag n-gram models (bigram / trigram).
//
// No smoothing: membership tests and raw counts are what the detector and
// the candidate ranking need, and transition probabilities are plain
// maximum-likelihood ratios.
//
// File format (UTF-8 TSV):
//
//   #order=2 unit=word
//   la	casa	5
//   casa	es	3

#ifndef TEXTCORR_LANGUAGE_MODEL_H_
#define TEXTCORR_LANGUAGE_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textcorr/lexicon.h"

namespace textcorr {

// Pseudo-word marking the start of a line.
inline constexpr std::string_view kLineStart = "<I>";

enum class NGramUnit { kWord, kTag };

std::string_view unit_name(NGramUnit unit);  // "word" / "tag"

class NGramModel {
 public:
  // Keys are the n-gram's tokens joined by '\t'.
  using CountMap = std::map<std::string, std::uint64_t, std::less<>>;

  // Throws ConfigError unless order is 2 or 3.
  NGramModel(int order, NGramUnit unit);

  int order() const { return order_; }
  NGramUnit unit() const { return unit_; }

  // Counts every contiguous n-gram of one line.
  void add_line(std::span<const std::string> tokens);
  // Adds `count` occurrences of one n-gram (length must equal order).
  void add(std::span<const std::string_view> gram, std::uint64_t count = 1);

  std::uint64_t count(std::span<const std::string_view> gram) const;
  std::uint64_t count(std::initializer_list<std::string_view> gram) const {
    return count(std::span<const std::string_view>(gram.begin(), gram.size()));
  }
  // Sum of counts over n-grams starting with `context` (order - 1 tokens).
  std::uint64_t context_total(std::span<const std::string_view> context) const;

  const CountMap& counts() const { return counts_; }
  const WordSet& vocabulary() const { return vocabulary_; }
  std::uint64_t total() const { return total_; }
  bool empty() const { return counts_.empty(); }

  // Same order, unit and counts.
  friend bool operator==(const NGramModel& a, const NGramModel& b) {
    return a.order_ == b.order_ && a.unit_ == b.unit_ && a.counts_ == b.counts_;
  }

 private:
  void check_length(std::size_t n, std::size_t expected) const;

  int order_;
  NGramUnit unit_;
  CountMap counts_;
  CountMap context_totals_;
  WordSet vocabulary_;
  std::uint64_t total_ = 0;
};

// N-grams never cross lines. Tag models accept only tag names and
// kLineStart.
NGramModel build_ngram_model(const std::vector<std::vector<std::string>>& lines,
                             int order, NGramUnit unit);

// Throws ContractViolation when the tuple length differs from the order.
bool contains_ngram(const NGramModel& model,
                    std::span<const std::string_view> gram);
inline bool contains_ngram(const NGramModel& model,
                           std::initializer_list<std::string_view> gram) {
  return contains_ngram(
      model, std::span<const std::string_view>(gram.begin(), gram.size()));
}

// count(context + next) / context_total(context); 0 for an unseen context.
double transition_probability(const NGramModel& model,
                              std::span<const std::string_view> context,
                              std::string_view next);

std::string format_model(const NGramModel& model);
// Throws ParseError with the offending line number. A header-only file is an
// empty model.
NGramModel parse_model(std::string_view text);

void save_model(const NGramModel& model, const std::filesystem::path& path);
NGramModel load_model(const std::filesystem::path& path);

}  // namespace textcorr

#endif  // TEXTCORR_LANGUAGE_MODEL_H_
