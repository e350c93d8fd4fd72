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

// Transformation-based (Brill-style) part-of-speech tagger.
//
// Tagging starts from each word's most frequent training tag (NOUN for
// unknown words) and then applies the learned rewrite rules in order. Each
// rule is one left-to-right pass over the sentence; a change is visible to
// the positions that follow it and to every later rule.
//
// Learning is greedy: at each step the rule with the largest net reduction
// of training errors is appended, until that reduction drops below
// min_gain or max_rules is reached.

#ifndef TEXTCORR_POS_TAGGER_H_
#define TEXTCORR_POS_TAGGER_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "textcorr/pos_tag.h"

namespace textcorr {

// Declaration order breaks ties between equally good rules.
enum class RuleTemplate {
  kPrevTag,   // tag at i-1 == trigger
  kNextTag,   // tag at i+1 == trigger
  kPrevWord,  // word at i-1 == trigger
  kNextWord,  // word at i+1 == trigger
  kPrev2Tag,  // tag at i-2 == trigger
  kNext2Tag,  // tag at i+2 == trigger
};

std::string_view template_name(RuleTemplate t);  // "PREV_TAG", ...
std::optional<RuleTemplate> parse_template(std::string_view name);

struct TransformRule {
  PosTag from_tag = PosTag::kNoun;
  PosTag to_tag = PosTag::kNoun;
  RuleTemplate templ = RuleTemplate::kPrevTag;
  std::string trigger;  // tag name or word

  friend bool operator==(const TransformRule&, const TransformRule&) = default;
};

std::string to_string(const TransformRule& rule);

struct TaggerModel {
  std::map<std::string, PosTag, std::less<>> lexical_table;
  PosTag default_tag = PosTag::kNoun;
  std::vector<TransformRule> rules;

  friend bool operator==(const TaggerModel&, const TaggerModel&) = default;
};

using TaggedWord = std::pair<std::string, PosTag>;
using TaggedSentence = std::vector<TaggedWord>;

// `word/TAG` tokens, one sentence per line; words are lowercased. Throws
// ParseError naming line and token for malformed tokens or unknown tags.
std::vector<TaggedSentence> parse_annotated_corpus(std::string_view text);
std::vector<TaggedSentence> load_annotated_corpus(
    const std::filesystem::path& path);

// Most frequent tag per word; ties go to the tag declared first.
TaggerModel train_initial(const std::vector<TaggedSentence>& corpus);

// Applies one rule in place (single left-to-right pass).
void apply_rule(const TransformRule& rule, const std::vector<std::string>& words,
                std::vector<PosTag>& tags);

std::vector<PosTag> tag_words(const std::vector<std::string>& words,
                              const TaggerModel& model);
TaggedSentence tag(const std::vector<std::string>& words,
                   const TaggerModel& model);

struct RuleLearningResult {
  std::vector<TransformRule> rules;
  // errors[k] = training tag errors after the first k rules.
  std::vector<std::size_t> errors;
};

// Throws ContractViolation for an empty corpus or min_gain == 0.
RuleLearningResult learn_rules(const std::vector<TaggedSentence>& corpus,
                               const TaggerModel& initial,
                               std::size_t max_rules, std::size_t min_gain);
RuleLearningResult learn_rules(const std::vector<TaggedSentence>& corpus,
                               std::size_t max_rules, std::size_t min_gain);

// Number of positions where tagging `corpus` with `model` disagrees with the
// gold tags.
std::size_t count_tag_errors(const std::vector<TaggedSentence>& corpus,
                             const TaggerModel& model);

std::string format_tagger_model(const TaggerModel& model);
TaggerModel parse_tagger_model(std::string_view text);
void save_tagger_model(const TaggerModel& model,
                       const std::filesystem::path& path);
TaggerModel load_tagger_model(const std::filesystem::path& path);

}  // namespace textcorr

#endif  // TEXTCORR_POS_TAGGER_H_
