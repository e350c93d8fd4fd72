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

#include "textcorr/pipeline.h"

#include "textcorr/errors.h"

namespace textcorr {

TagLines tag_document(const Document& doc, const TaggerModel& model) {
  TagLines out;
  out.reserve(doc.lines.size());
  for (const auto& line : doc.lines) {
    auto& tags = out.emplace_back();
    tags.reserve(line.size());
    for (const auto& [begin, end] : sentence_spans(line)) {
      std::vector<std::string> words;
      for (std::size_t k = begin; k < end; ++k) words.push_back(line[k].normalized);
      for (PosTag t : tag_words(words, model)) tags.push_back(t);
    }
  }
  return out;
}

PipelineResult run_pipeline(std::string_view raw_text,
                            const PipelineResources& resources,
                            const PipelineOptions& options,
                            const TagLines* gold_tags) {
  PipelineResult result;
  result.document = normalize(raw_text, resources.abbreviations);
  const bool pos_mode = options.mode == Mode::kPaec;

  if (pos_mode) {
    if (gold_tags != nullptr) {
      result.tags = *gold_tags;
    } else if (resources.tagger) {
      result.tags = tag_document(result.document, *resources.tagger);
    } else {
      throw ConfigError("POS mode needs a tagger model");
    }
  }
  const TagLines* tags = result.tags ? &*result.tags : nullptr;

  const LexiconSet& lexicons = resources.lexicons;
  const WordLookup lookup = [&lexicons](std::string_view w,
                                        std::optional<PosTag> t) {
    return lookup_for(w, t, lexicons);
  };
  const NGramModel* tag_filter =
      pos_mode && options.use_tag_lm && resources.tag_bigrams
          ? &*resources.tag_bigrams
          : nullptr;
  result.detections = detect(make_detection_input(result.document, tags), lookup,
                             resources.word_bigrams, tag_filter);

  const CorrectionResources cr{
      lexicons, resources.word_bigrams,
      resources.word_trigrams ? &*resources.word_trigrams : nullptr};
  CorrectionOutcome outcome = correct_document(
      result.document, result.detections, options.mode, cr, tags, options.max_ed);
  result.corrections = std::move(outcome.corrections);
  result.text = denormalize(outcome.document);
  return result;
}

}  // namespace textcorr
