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

// Contextual error detection.
//
// Each line is scanned left to right with the line-start pseudo-word in
// front. For the current word `pa` with neighbours `ant` and `post`:
//
//   pa not in its lexicon                  -> flag pa
//   else if bigram [ant,pa] is unseen:
//     ant not in its lexicon               -> flag ant
//     else                                 -> remember "left evidence"
//     if bigram [pa,post] is also unseen:
//       post not in its lexicon            -> flag post
//       else if post not yet flagged       -> remember "right evidence"
//     right evidence                       -> flag pa
//     left evidence and ant not flagged    -> flag pa
//
// Bigrams touching the line-start pseudo-word or the virtual end of line
// always count as seen. The evidence markers are reset for every word and
// the flagged list never holds a position twice.

#ifndef TEXTCORR_DETECTOR_H_
#define TEXTCORR_DETECTOR_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textcorr/language_model.h"
#include "textcorr/lexicon.h"
#include "textcorr/normalizer.h"
#include "textcorr/pos_tag.h"

namespace textcorr {

// Tags aligned with a Document: one tag per token per line.
using TagLines = std::vector<std::vector<PosTag>>;

struct DetectionInput {
  // Words per line, each line starting with kLineStart.
  std::vector<std::vector<std::string>> lines;
  // Present in POS mode: parallel to `lines`, empty optional at the
  // pseudo-word.
  std::optional<std::vector<std::vector<std::optional<PosTag>>>> tags;
};

struct Detection {
  std::size_t line_index = 0;
  std::size_t token_index = 0;  // position in the document line (no pseudo-word)
  std::string word;

  friend auto operator<=>(const Detection&, const Detection&) = default;
};

struct DetectionResult {
  // Sorted by (line, token); no duplicate positions.
  std::vector<Detection> flagged;

  bool contains(std::size_t line, std::size_t token) const;
  std::size_t size() const { return flagged.size(); }
  bool empty() const { return flagged.empty(); }
};

using WordLookup =
    std::function<bool(std::string_view word, std::optional<PosTag> tag)>;

// With a tag: membership in that category's lexicon (GENERAL for MISC).
// Without: membership in GENERAL.
bool lookup_for(std::string_view word, std::optional<PosTag> tag,
                const LexiconSet& lexicons);

// Prefixes every line with the pseudo-word; `tags` (when given) must match
// the document's token layout.
DetectionInput make_detection_input(const Document& doc,
                                    const TagLines* tags = nullptr);

// `bigrams` must be a word model of order 2. When `tag_bigrams` is given and
// the input carries tags, the line is scanned a second time with every word
// bigram whose tag bigram is unseen treated as unseen, and the flags of both
// scans are merged, so the filter never removes a flag. Throws
// ContractViolation on mismatched tag lengths or an unsuitable model.
DetectionResult detect(const DetectionInput& input, const WordLookup& lookup,
                       const NGramModel& bigrams,
                       const NGramModel* tag_bigrams = nullptr);

// TSV `line<TAB>token<TAB>word`, one detection per line.
std::string format_detections(const DetectionResult& result);
DetectionResult parse_detections(std::string_view text);

}  // namespace textcorr

#endif  // TEXTCORR_DETECTOR_H_
