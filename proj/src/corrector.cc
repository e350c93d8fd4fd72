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

#include "textcorr/corrector.h"

#include <algorithm>
#include <tuple>

#include "textcorr/errors.h"
#include "textcorr/similarity.h"
#include "textcorr/unicode.h"

namespace textcorr {

std::size_t default_max_edit_distance(std::string_view word) {
  return unicode::length(word) >= 4 ? 2 : 1;
}

std::vector<Candidate> generate_candidates(std::string_view err,
                                           std::optional<PosTag> tag,
                                           const LexiconSet& lexicons,
                                           std::size_t max_ed) {
  if (err.empty()) throw ContractViolation("candidates for an empty word");
  const Lexicon& lex = lexicons.for_tag(tag);
  const std::u32string err_chars = unicode::decode(err);
  const std::string err_skeleton = skeleton(err);

  std::vector<Candidate> out;
  for (const std::string& word : candidates_by_overlap(lex, err)) {
    if (word == err) continue;
    const std::u32string chars = unicode::decode(word);
    const std::size_t ed = edit_distance(err_chars, chars);
    if (ed > max_ed) continue;
    Candidate c;
    c.word = word;
    c.source = lex.label();
    c.edit_dist = ed;
    c.skeleton_dist = edit_distance(err_skeleton, skeleton(word));
    c.len_diff = err_chars.size() > chars.size() ? err_chars.size() - chars.size()
                                                 : chars.size() - err_chars.size();
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<Candidate> select_candidate(
    std::vector<Candidate> candidates, std::string_view left,
    std::optional<std::string_view> right, const NGramModel& bigrams,
    const NGramModel* trigrams) {
  if (candidates.empty()) return std::nullopt;
  for (Candidate& c : candidates) {
    std::uint64_t score = bigrams.count({left, c.word});
    if (right) {
      score += bigrams.count({c.word, *right});
      if (trigrams != nullptr) score += trigrams->count({left, c.word, *right});
    }
    c.context_score = score;
  }
  auto key = [](const Candidate& c) {
    // Larger context score first.
    return std::make_tuple(~c.context_score, c.edit_dist, c.skeleton_dist,
                           c.len_diff, std::string_view(c.word));
  };
  return *std::min_element(
      candidates.begin(), candidates.end(),
      [&](const Candidate& a, const Candidate& b) { return key(a) < key(b); });
}

CorrectionOutcome correct_document(const Document& doc,
                                   const DetectionResult& detections, Mode mode,
                                   const CorrectionResources& resources,
                                   const TagLines* tags,
                                   std::optional<std::size_t> max_ed) {
  if (mode == Mode::kPaec && tags == nullptr) {
    throw ContractViolation("POS mode correction needs tags");
  }
  CorrectionOutcome outcome{doc, {}};
  outcome.corrections.reserve(detections.size());
  for (const Detection& d : detections.flagged) {
    if (d.line_index >= doc.lines.size() ||
        d.token_index >= doc.lines[d.line_index].size()) {
      throw ContractViolation("detection (" + std::to_string(d.line_index) +
                              ", " + std::to_string(d.token_index) +
                              ") is outside the document");
    }
    const auto& line = doc.lines[d.line_index];
    const std::string& original = line[d.token_index].normalized;

    std::optional<PosTag> tag;
    if (mode == Mode::kPaec) {
      const auto& line_tags = (*tags)[d.line_index];
      if (line_tags.size() != line.size()) {
        throw ContractViolation("tags do not match line " +
                                std::to_string(d.line_index));
      }
      tag = line_tags[d.token_index];
    }

    const std::size_t limit = max_ed.value_or(default_max_edit_distance(original));
    const std::string_view left =
        d.token_index == 0 ? kLineStart
                           : std::string_view(line[d.token_index - 1].normalized);
    std::optional<std::string_view> right;
    if (d.token_index + 1 < line.size()) right = line[d.token_index + 1].normalized;

    Correction correction{d.line_index, d.token_index, original, std::nullopt};
    auto best = select_candidate(
        generate_candidates(original, tag, resources.lexicons, limit), left,
        right, resources.bigrams, resources.trigrams);
    if (best) {
      correction.replacement = best->word;
      outcome.document.lines[d.line_index][d.token_index].normalized = best->word;
    }
    outcome.corrections.push_back(std::move(correction));
  }
  return outcome;
}

std::string format_corrections(const std::vector<Correction>& corrections) {
  std::string out;
  for (const Correction& c : corrections) {
    out += std::to_string(c.line_index);
    out.push_back('\t');
    out += std::to_string(c.token_index);
    out.push_back('\t');
    out += c.original;
    out.push_back('\t');
    out += c.replacement.value_or("-");
    out.push_back('\n');
  }
  return out;
}

}  // namespace textcorr
