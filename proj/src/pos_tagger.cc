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

#include "textcorr/pos_tagger.h"

#include <array>
#include <set>
#include <tuple>

#include "textcorr/errors.h"
#include "textcorr/io.h"
#include "textcorr/unicode.h"

namespace textcorr {
namespace {

constexpr std::array<std::string_view, 6> kTemplateNames = {
    "PREV_TAG", "NEXT_TAG", "PREV_WORD", "NEXT_WORD", "PREV2_TAG", "NEXT2_TAG"};

// Offset of the context position a template inspects, and whether it looks
// at a tag (true) or a word (false).
std::pair<int, bool> template_shape(RuleTemplate t) {
  switch (t) {
    case RuleTemplate::kPrevTag:
      return {-1, true};
    case RuleTemplate::kNextTag:
      return {1, true};
    case RuleTemplate::kPrevWord:
      return {-1, false};
    case RuleTemplate::kNextWord:
      return {1, false};
    case RuleTemplate::kPrev2Tag:
      return {-2, true};
    case RuleTemplate::kNext2Tag:
      return {2, true};
  }
  return {0, true};
}

// Rule order used both for de-duplication and for tie-breaking: template,
// then trigger, then source and target tag.
struct RuleLess {
  bool operator()(const TransformRule& a, const TransformRule& b) const {
    return std::tie(a.templ, a.trigger, a.from_tag, a.to_tag) <
           std::tie(b.templ, b.trigger, b.from_tag, b.to_tag);
  }
};

struct TrainingSentence {
  std::vector<std::string> words;
  std::vector<PosTag> gold;
  std::vector<PosTag> current;
};

std::size_t errors_in(const std::vector<PosTag>& tags,
                      const std::vector<PosTag>& gold) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < tags.size(); ++i) n += tags[i] != gold[i];
  return n;
}

std::vector<PosTag> initial_tags(const std::vector<std::string>& words,
                                 const TaggerModel& model) {
  std::vector<PosTag> tags;
  tags.reserve(words.size());
  for (const std::string& w : words) {
    auto it = model.lexical_table.find(w);
    tags.push_back(it == model.lexical_table.end() ? model.default_tag
                                                   : it->second);
  }
  return tags;
}

}  // namespace

std::string_view template_name(RuleTemplate t) {
  return kTemplateNames[static_cast<std::size_t>(t)];
}

std::optional<RuleTemplate> parse_template(std::string_view name) {
  for (std::size_t i = 0; i < kTemplateNames.size(); ++i) {
    if (kTemplateNames[i] == name) return static_cast<RuleTemplate>(i);
  }
  return std::nullopt;
}

std::string to_string(const TransformRule& rule) {
  return std::string(tag_name(rule.from_tag)) + "->" +
         std::string(tag_name(rule.to_tag)) + " if " +
         std::string(template_name(rule.templ)) + "=" + rule.trigger;
}

std::vector<TaggedSentence> parse_annotated_corpus(std::string_view text) {
  unicode::decode(text);
  std::vector<TaggedSentence> corpus;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    TaggedSentence sentence;
    std::size_t token_no = 0;
    for (const std::string& token : split_words(line)) {
      ++token_no;
      const std::size_t slash = token.rfind('/');
      const std::string where = "token " + std::to_string(token_no) + " '" +
                                token + "'";
      if (slash == std::string::npos || slash == 0) {
        throw ParseError(line_no, where + ": expected word/TAG");
      }
      const auto tag = parse_tag(std::string_view(token).substr(slash + 1));
      if (!tag) throw ParseError(line_no, where + ": unknown tag");
      sentence.emplace_back(unicode::lowercase(token.substr(0, slash)), *tag);
    }
    if (!sentence.empty()) corpus.push_back(std::move(sentence));
  }
  return corpus;
}

std::vector<TaggedSentence> load_annotated_corpus(
    const std::filesystem::path& path) {
  try {
    return parse_annotated_corpus(read_text_file(path));
  } catch (const ParseError& e) {
    throw e.in_file(path.string());
  }
}

TaggerModel train_initial(const std::vector<TaggedSentence>& corpus) {
  std::map<std::string, std::array<std::size_t, kAllPosTags.size()>,
           std::less<>>
      counts;
  for (const TaggedSentence& sentence : corpus) {
    for (const auto& [word, tag] : sentence) {
      counts[word][static_cast<std::size_t>(tag)]++;
    }
  }
  TaggerModel model;
  for (const auto& [word, per_tag] : counts) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < per_tag.size(); ++t) {
      if (per_tag[t] > per_tag[best]) best = t;  // strict: earlier tag wins ties
    }
    model.lexical_table.emplace(word, static_cast<PosTag>(best));
  }
  return model;
}

void apply_rule(const TransformRule& rule, const std::vector<std::string>& words,
                std::vector<PosTag>& tags) {
  const auto [offset, on_tag] = template_shape(rule.templ);
  std::optional<PosTag> trigger_tag;
  if (on_tag) {
    trigger_tag = parse_tag(rule.trigger);
    if (!trigger_tag) return;
  }
  const auto n = static_cast<std::ptrdiff_t>(tags.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (tags[i] != rule.from_tag) continue;
    const std::ptrdiff_t j = i + offset;
    if (j < 0 || j >= n) continue;
    const bool fires = on_tag ? tags[j] == *trigger_tag : words[j] == rule.trigger;
    if (fires) tags[i] = rule.to_tag;
  }
}

std::vector<PosTag> tag_words(const std::vector<std::string>& words,
                              const TaggerModel& model) {
  std::vector<PosTag> tags = initial_tags(words, model);
  for (const TransformRule& rule : model.rules) apply_rule(rule, words, tags);
  return tags;
}

TaggedSentence tag(const std::vector<std::string>& words,
                   const TaggerModel& model) {
  const std::vector<PosTag> tags = tag_words(words, model);
  TaggedSentence out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out.emplace_back(words[i], tags[i]);
  return out;
}

std::size_t count_tag_errors(const std::vector<TaggedSentence>& corpus,
                             const TaggerModel& model) {
  std::size_t errors = 0;
  for (const TaggedSentence& sentence : corpus) {
    std::vector<std::string> words;
    std::vector<PosTag> gold;
    for (const auto& [w, t] : sentence) {
      words.push_back(w);
      gold.push_back(t);
    }
    errors += errors_in(tag_words(words, model), gold);
  }
  return errors;
}

RuleLearningResult learn_rules(const std::vector<TaggedSentence>& corpus,
                               const TaggerModel& initial,
                               std::size_t max_rules, std::size_t min_gain) {
  if (corpus.empty()) throw ContractViolation("empty training corpus");
  if (min_gain == 0) throw ContractViolation("min_gain must be at least 1");

  std::vector<TrainingSentence> data;
  data.reserve(corpus.size());
  std::size_t errors = 0;
  for (const TaggedSentence& sentence : corpus) {
    TrainingSentence s;
    for (const auto& [w, t] : sentence) {
      s.words.push_back(w);
      s.gold.push_back(t);
    }
    s.current = tag_words(s.words, initial);
    errors += errors_in(s.current, s.gold);
    data.push_back(std::move(s));
  }

  RuleLearningResult result;
  result.errors.push_back(errors);
  std::vector<PosTag> scratch;
  while (result.rules.size() < max_rules && errors > 0) {
    // Rules that would fix at least one current error.
    std::set<TransformRule, RuleLess> candidates;
    for (const TrainingSentence& s : data) {
      const auto n = static_cast<std::ptrdiff_t>(s.words.size());
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (s.current[i] == s.gold[i]) continue;
        for (std::size_t t = 0; t < kTemplateNames.size(); ++t) {
          const auto templ = static_cast<RuleTemplate>(t);
          const auto [offset, on_tag] = template_shape(templ);
          const std::ptrdiff_t j = i + offset;
          if (j < 0 || j >= n) continue;
          candidates.insert(
              {s.current[i], s.gold[i], templ,
               on_tag ? std::string(tag_name(s.current[j])) : s.words[j]});
        }
      }
    }

    const TransformRule* best = nullptr;
    std::ptrdiff_t best_gain = 0;
    for (const TransformRule& rule : candidates) {
      std::ptrdiff_t gain = 0;
      for (const TrainingSentence& s : data) {
        scratch = s.current;
        apply_rule(rule, s.words, scratch);
        gain += static_cast<std::ptrdiff_t>(errors_in(s.current, s.gold)) -
                static_cast<std::ptrdiff_t>(errors_in(scratch, s.gold));
      }
      // Candidates iterate in tie-break order, so only a strictly larger gain
      // replaces the incumbent.
      if (gain > best_gain) {
        best_gain = gain;
        best = &rule;
      }
    }
    if (best == nullptr || best_gain < static_cast<std::ptrdiff_t>(min_gain)) {
      break;
    }

    errors = 0;
    for (TrainingSentence& s : data) {
      apply_rule(*best, s.words, s.current);
      errors += errors_in(s.current, s.gold);
    }
    result.rules.push_back(*best);
    result.errors.push_back(errors);
  }
  return result;
}

RuleLearningResult learn_rules(const std::vector<TaggedSentence>& corpus,
                               std::size_t max_rules, std::size_t min_gain) {
  return learn_rules(corpus, train_initial(corpus), max_rules, min_gain);
}

std::string format_tagger_model(const TaggerModel& model) {
  std::string out = "#default=" + std::string(tag_name(model.default_tag)) + "\n";
  for (const auto& [word, t] : model.lexical_table) {
    out += word;
    out.push_back('\t');
    out += tag_name(t);
    out.push_back('\n');
  }
  for (const TransformRule& r : model.rules) {
    out += "RULE\t";
    out += tag_name(r.from_tag);
    out.push_back('\t');
    out += tag_name(r.to_tag);
    out.push_back('\t');
    out += template_name(r.templ);
    out.push_back('\t');
    out += r.trigger;
    out.push_back('\n');
  }
  return out;
}

TaggerModel parse_tagger_model(std::string_view text) {
  unicode::decode(text);
  const std::vector<std::string_view> lines = split_lines(text);
  constexpr std::string_view kHeader = "#default=";
  if (lines.empty() || !lines[0].starts_with(kHeader)) {
    throw ParseError(1, "missing '#default=<TAG>' header");
  }
  TaggerModel model;
  const auto default_tag = parse_tag(lines[0].substr(kHeader.size()));
  if (!default_tag) throw ParseError(1, "unknown default tag");
  model.default_tag = *default_tag;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = lines[i];
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields[0] == "RULE") {
      if (fields.size() != 5) throw ParseError(line_no, "malformed RULE line");
      const auto from = parse_tag(fields[1]);
      const auto to = parse_tag(fields[2]);
      const auto templ = parse_template(fields[3]);
      if (!from || !to) throw ParseError(line_no, "unknown tag in rule");
      if (!templ) throw ParseError(line_no, "unknown rule template");
      if (*from == *to) throw ParseError(line_no, "rule does not change the tag");
      if (fields[4].empty()) throw ParseError(line_no, "empty rule trigger");
      model.rules.push_back({*from, *to, *templ, std::string(fields[4])});
      continue;
    }
    if (!model.rules.empty()) {
      throw ParseError(line_no, "lexical entry after rule lines");
    }
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError(line_no, "expected word<TAB>TAG");
    }
    const auto t = parse_tag(fields[1]);
    if (!t) throw ParseError(line_no, "unknown tag '" + std::string(fields[1]) + "'");
    model.lexical_table.insert_or_assign(std::string(fields[0]), *t);
  }
  return model;
}

void save_tagger_model(const TaggerModel& model,
                       const std::filesystem::path& path) {
  write_text_file(path, format_tagger_model(model));
}

TaggerModel load_tagger_model(const std::filesystem::path& path) {
  try {
    return parse_tagger_model(read_text_file(path));
  } catch (const ParseError& e) {
    throw e.in_file(path.string());
  }
}

}  // namespace textcorr
