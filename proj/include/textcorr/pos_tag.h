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

#ifndef TEXTCORR_POS_TAG_H_
#define TEXTCORR_POS_TAG_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace textcorr {

// Declaration order is significant: it breaks ties in the tagger.
enum class PosTag : std::uint8_t {
  kVerb,
  kNoun,
  kConj,
  kPrep,
  kArt,
  kAdj,
  kAdv,
  kPron,
  kIntj,
  kMisc,
};

inline constexpr std::array<PosTag, 10> kAllPosTags = {
    PosTag::kVerb, PosTag::kNoun, PosTag::kConj, PosTag::kPrep, PosTag::kArt,
    PosTag::kAdj,  PosTag::kAdv,  PosTag::kPron, PosTag::kIntj, PosTag::kMisc};

// "VERB", "NOUN", ...
std::string_view tag_name(PosTag tag);
std::optional<PosTag> parse_tag(std::string_view name);

// Every tag but MISC owns a lexicon; GENERAL holds words of all categories.
enum class LexiconLabel : std::uint8_t {
  kVerb,
  kNoun,
  kConj,
  kPrep,
  kArt,
  kAdj,
  kAdv,
  kPron,
  kIntj,
  kGeneral,
};

inline constexpr std::array<LexiconLabel, 10> kAllLexiconLabels = {
    LexiconLabel::kVerb, LexiconLabel::kNoun, LexiconLabel::kConj,
    LexiconLabel::kPrep, LexiconLabel::kArt,  LexiconLabel::kAdj,
    LexiconLabel::kAdv,  LexiconLabel::kPron, LexiconLabel::kIntj,
    LexiconLabel::kGeneral};

// MISC maps to GENERAL.
LexiconLabel lexicon_label_for(PosTag tag);
// Lowercase file-name form: "verb", ..., "general".
std::string_view label_name(LexiconLabel label);
std::optional<LexiconLabel> parse_label(std::string_view name);

}  // namespace textcorr

#endif  // TEXTCORR_POS_TAG_H_
