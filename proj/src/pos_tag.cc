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

#include "textcorr/pos_tag.h"

namespace textcorr {
namespace {

constexpr std::array<std::string_view, 10> kTagNames = {
    "VERB", "NOUN", "CONJ", "PREP", "ART", "ADJ", "ADV", "PRON", "INTJ", "MISC"};

constexpr std::array<std::string_view, 10> kLabelNames = {
    "verb", "noun", "conj", "prep", "art", "adj", "adv", "pron", "intj",
    "general"};

}  // namespace

std::string_view tag_name(PosTag tag) {
  return kTagNames[static_cast<std::size_t>(tag)];
}

std::optional<PosTag> parse_tag(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

LexiconLabel lexicon_label_for(PosTag tag) {
  if (tag == PosTag::kMisc) return LexiconLabel::kGeneral;
  // The first nine enumerators line up.
  return static_cast<LexiconLabel>(static_cast<std::uint8_t>(tag));
}

std::string_view label_name(LexiconLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)];
}

std::optional<LexiconLabel> parse_label(std::string_view name) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return static_cast<LexiconLabel>(i);
  }
  return std::nullopt;
}

}  // namespace textcorr
