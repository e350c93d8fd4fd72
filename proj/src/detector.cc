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

#include "textcorr/detector.h"

#include <algorithm>
#include <charconv>

#include "textcorr/errors.h"
#include "textcorr/io.h"

namespace textcorr {
namespace {

class LineScan {
 public:
  LineScan(const std::vector<std::string>& words,
           const std::vector<std::optional<PosTag>>* tags,
           const WordLookup& lookup, const NGramModel& bigrams,
           const NGramModel* tag_bigrams)
      : words_(words),
        tags_(tags),
        lookup_(lookup),
        bigrams_(bigrams),
        tag_bigrams_(tags != nullptr ? tag_bigrams : nullptr),
        flagged_(words.size(), false) {}

  std::vector<bool> run() {
    const std::size_t n = words_.size();
    for (std::size_t k = 1; k < n; ++k) {
      if (!in_lexicon(k)) {
        flag(k);
        continue;
      }
      if (seen(k - 1, k)) continue;
      bool left_evidence = false;
      bool right_evidence = false;
      if (!in_lexicon(k - 1)) {
        flag(k - 1);
      } else {
        left_evidence = true;
      }
      if (!seen(k, k + 1)) {
        // k + 1 < n here: the end-of-line bigram is always seen.
        if (!in_lexicon(k + 1)) {
          flag(k + 1);
        } else if (!flagged_[k + 1]) {
          right_evidence = true;
        }
      }
      if (right_evidence) flag(k);
      if (left_evidence && !flagged_[k - 1]) flag(k);
    }
    return flagged_;
  }

 private:
  std::optional<PosTag> tag_at(std::size_t k) const {
    return tags_ != nullptr ? (*tags_)[k] : std::nullopt;
  }

  bool in_lexicon(std::size_t k) const {
    if (k == 0) return true;  // pseudo-word
    return lookup_(words_[k], tag_at(k));
  }

  bool seen(std::size_t a, std::size_t b) const {
    if (a == 0 || b >= words_.size()) return true;
    if (bigrams_.count({words_[a], words_[b]}) == 0) return false;
    if (tag_bigrams_ == nullptr) return true;
    const auto ta = tag_at(a);
    const auto tb = tag_at(b);
    if (!ta || !tb) return true;
    return tag_bigrams_->count({tag_name(*ta), tag_name(*tb)}) > 0;
  }

  void flag(std::size_t k) { flagged_[k] = true; }

  const std::vector<std::string>& words_;
  const std::vector<std::optional<PosTag>>* tags_;
  const WordLookup& lookup_;
  const NGramModel& bigrams_;
  const NGramModel* tag_bigrams_;
  std::vector<bool> flagged_;
};

}  // namespace

bool DetectionResult::contains(std::size_t line, std::size_t token) const {
  auto it = std::lower_bound(
      flagged.begin(), flagged.end(), std::pair{line, token},
      [](const Detection& d, const std::pair<std::size_t, std::size_t>& key) {
        return std::pair{d.line_index, d.token_index} < key;
      });
  return it != flagged.end() && it->line_index == line && it->token_index == token;
}

bool lookup_for(std::string_view word, std::optional<PosTag> tag,
                const LexiconSet& lexicons) {
  return lexicons.for_tag(tag).contains(word);
}

DetectionInput make_detection_input(const Document& doc, const TagLines* tags) {
  if (tags != nullptr && tags->size() != doc.lines.size()) {
    throw ContractViolation("tag lines do not match document lines");
  }
  DetectionInput input;
  if (tags != nullptr) input.tags.emplace();
  for (std::size_t l = 0; l < doc.lines.size(); ++l) {
    const auto& line = doc.lines[l];
    auto& words = input.lines.emplace_back();
    words.reserve(line.size() + 1);
    words.emplace_back(kLineStart);
    for (const Token& t : line) words.push_back(t.normalized);
    if (tags != nullptr) {
      const auto& line_tags = (*tags)[l];
      if (line_tags.size() != line.size()) {
        throw ContractViolation("tag count differs from token count on line " +
                                std::to_string(l));
      }
      auto& out = input.tags->emplace_back();
      out.reserve(line.size() + 1);
      out.emplace_back(std::nullopt);
      for (PosTag t : line_tags) out.emplace_back(t);
    }
  }
  return input;
}

DetectionResult detect(const DetectionInput& input, const WordLookup& lookup,
                       const NGramModel& bigrams,
                       const NGramModel* tag_bigrams) {
  if (bigrams.order() != 2 || bigrams.unit() != NGramUnit::kWord) {
    throw ContractViolation("detection needs a word bigram model");
  }
  if (tag_bigrams != nullptr &&
      (tag_bigrams->order() != 2 || tag_bigrams->unit() != NGramUnit::kTag)) {
    throw ContractViolation("tag filter needs a tag bigram model");
  }
  if (input.tags && input.tags->size() != input.lines.size()) {
    throw ContractViolation("tag lines do not match word lines");
  }
  DetectionResult result;
  for (std::size_t l = 0; l < input.lines.size(); ++l) {
    const auto& words = input.lines[l];
    const std::vector<std::optional<PosTag>>* tags = nullptr;
    if (input.tags) {
      tags = &(*input.tags)[l];
      if (tags->size() != words.size()) {
        throw ContractViolation("tag count differs from word count on line " +
                                std::to_string(l));
      }
    }
    std::vector<bool> flagged = LineScan(words, tags, lookup, bigrams, nullptr).run();
    if (tag_bigrams != nullptr && tags != nullptr) {
      // Fewer seen bigrams can move blame off a word, so the filtered scan
      // is merged with the plain one: the filter only ever adds flags.
      const std::vector<bool> extra =
          LineScan(words, tags, lookup, bigrams, tag_bigrams).run();
      for (std::size_t k = 0; k < flagged.size(); ++k) {
        if (extra[k]) flagged[k] = true;
      }
    }
    for (std::size_t k = 1; k < words.size(); ++k) {
      if (flagged[k]) result.flagged.push_back({l, k - 1, words[k]});
    }
  }
  return result;
}

std::string format_detections(const DetectionResult& result) {
  std::string out;
  for (const Detection& d : result.flagged) {
    out += std::to_string(d.line_index);
    out.push_back('\t');
    out += std::to_string(d.token_index);
    out.push_back('\t');
    out += d.word;
    out.push_back('\n');
  }
  return out;
}

DetectionResult parse_detections(std::string_view text) {
  DetectionResult result;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string_view::npos
                               ? std::string_view::npos
                               : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw ParseError(line_no, "expected line<TAB>token<TAB>word");
    }
    auto number = [&](std::string_view field) {
      std::size_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() ||
          ptr != field.data() + field.size()) {
        throw ParseError(line_no, "bad position '" + std::string(field) + "'");
      }
      return value;
    };
    result.flagged.push_back({number(line.substr(0, t1)),
                              number(line.substr(t1 + 1, t2 - t1 - 1)),
                              std::string(line.substr(t2 + 1))});
  }
  std::sort(result.flagged.begin(), result.flagged.end());
  auto same_pos = [](const Detection& a, const Detection& b) {
    return a.line_index == b.line_index && a.token_index == b.token_index;
  };
  result.flagged.erase(
      std::unique(result.flagged.begin(), result.flagged.end(), same_pos),
      result.flagged.end());
  return result;
}

}  // namespace textcorr
