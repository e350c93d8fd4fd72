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

// The correction pipelines as whole-text transformations.
//
// MAEC: normalize -> detect (GENERAL lexicon) -> correct -> denormalize.
// PAEC: normalize -> tag each sentence -> detect against the lexicon of each
// word's tag -> correct from that lexicon -> denormalize.

#ifndef TEXTCORR_PIPELINE_H_
#define TEXTCORR_PIPELINE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textcorr/corrector.h"
#include "textcorr/detector.h"
#include "textcorr/language_model.h"
#include "textcorr/lexicon.h"
#include "textcorr/normalizer.h"
#include "textcorr/pos_tagger.h"

namespace textcorr {

struct PipelineResources {
  LexiconSet lexicons;
  NGramModel word_bigrams{2, NGramUnit::kWord};
  std::optional<NGramModel> word_trigrams;
  std::optional<NGramModel> tag_bigrams;
  std::optional<TaggerModel> tagger;
  AbbreviationTable abbreviations;
};

struct PipelineOptions {
  Mode mode = Mode::kMaec;
  std::optional<std::size_t> max_ed;
  // Count a word pair as unseen when its tag bigram is unseen (POS mode).
  bool use_tag_lm = false;
};

struct PipelineResult {
  std::string text;
  Document document;  // normalized input, before correction
  std::optional<TagLines> tags;
  DetectionResult detections;
  std::vector<Correction> corrections;
};

// Tags every sentence of every line independently.
TagLines tag_document(const Document& doc, const TaggerModel& model);

// In POS mode `gold_tags`, when given, replaces the tagger output. Without
// either a tagger or gold tags POS mode throws ConfigError.
PipelineResult run_pipeline(std::string_view raw_text,
                            const PipelineResources& resources,
                            const PipelineOptions& options,
                            const TagLines* gold_tags = nullptr);

}  // namespace textcorr

#endif  // TEXTCORR_PIPELINE_H_
