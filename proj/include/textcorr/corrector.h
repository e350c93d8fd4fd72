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

// Candidate generation and selection for flagged words.

#ifndef TEXTCORR_CORRECTOR_H_
#define TEXTCORR_CORRECTOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textcorr/detector.h"
#include "textcorr/language_model.h"
#include "textcorr/lexicon.h"
#include "textcorr/normalizer.h"
#include "textcorr/pos_tag.h"

namespace textcorr {

// POS-tagged pipeline vs. morphology-only baseline.
enum class Mode { kPaec, kMaec };

struct Candidate {
  std::string word;
  LexiconLabel source = LexiconLabel::kGeneral;
  std::size_t edit_dist = 0;
  std::size_t skeleton_dist = 0;
  std::size_t len_diff = 0;
  std::uint64_t context_score = 0;  // filled in by select_candidate

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct Correction {
  std::size_t line_index = 0;
  std::size_t token_index = 0;
  std::string original;
  std::optional<std::string> replacement;  // empty: left unchanged

  friend bool operator==(const Correction&, const Correction&) = default;
};

// 2 for words of four or more characters, else 1.
std::size_t default_max_edit_distance(std::string_view word);

// Words from the tag's lexicon (GENERAL without a tag or for MISC) that share
// a letter n-gram or the skeleton with `err` and lie within `max_ed` edits.
// `err` itself is never a candidate. Sorted by word.
std::vector<Candidate> generate_candidates(std::string_view err,
                                           std::optional<PosTag> tag,
                                           const LexiconSet& lexicons,
                                           std::size_t max_ed);

// Scores each candidate against its neighbours and returns the best by
// (context score desc, edit distance, skeleton distance, length difference,
// word). The score is count(left, c) + count(c, right) in `bigrams` plus
// count(left, c, right) in `trigrams`. `right` is empty at the end of a
// line.
std::optional<Candidate> select_candidate(
    std::vector<Candidate> candidates, std::string_view left,
    std::optional<std::string_view> right, const NGramModel& bigrams,
    const NGramModel* trigrams = nullptr);

struct CorrectionResources {
  const LexiconSet& lexicons;
  const NGramModel& bigrams;
  const NGramModel* trigrams = nullptr;
};

struct CorrectionOutcome {
  Document document;
  std::vector<Correction> corrections;  // one per detection, in order
};

// Corrects every detected position independently, always scoring against
// the uncorrected neighbours. POS mode needs `tags`; `max_ed` overrides
// default_max_edit_distance. Throws ContractViolation for a detection
// outside the document.
CorrectionOutcome correct_document(const Document& doc,
                                   const DetectionResult& detections, Mode mode,
                                   const CorrectionResources& resources,
                                   const TagLines* tags = nullptr,
                                   std::optional<std::size_t> max_ed = {});

// TSV `line<TAB>token<TAB>original<TAB>replacement|-`.
std::string format_corrections(const std::vector<Correction>& corrections);

}  // namespace textcorr

#endif  // TEXTCORR_CORRECTOR_H_
