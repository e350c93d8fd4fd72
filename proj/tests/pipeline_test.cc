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

#include <gtest/gtest.h>

#include "support/end_to_end.h"
#include "textcorr/errors.h"

namespace textcorr {
namespace {

PipelineResources la_casa_resources() {
  PipelineResources r;
  r.lexicons = LexiconSet(build_lexicon({"la", "casa", "es"}, LexiconLabel::kGeneral));
  r.lexicons.add(build_lexicon({"la"}, LexiconLabel::kArt));
  r.lexicons.add(build_lexicon({"casa"}, LexiconLabel::kNoun));
  r.lexicons.add(build_lexicon({"es"}, LexiconLabel::kVerb));
  r.word_bigrams.add_line(std::vector<std::string>{"la", "casa", "es"});
  TaggerModel tagger;
  tagger.lexical_table = {{"la", PosTag::kArt}, {"casa", PosTag::kNoun}, {"es", PosTag::kVerb}};
  r.tagger = tagger;
  return r;
}

TEST(PipelineTest, MaecFixesNonWord) {
  const PipelineResult r = run_pipeline("La cassa es.\n", la_casa_resources(), {});
  EXPECT_EQ(r.text, "La casa es.\n");
  EXPECT_EQ(r.detections.size(), 1u);
  EXPECT_FALSE(r.tags);
}

TEST(PipelineTest, ErrorFreeInputIsUntouched) {
  const std::string text = "  La casa es.\n\nla casa\tes!";
  for (Mode mode : {Mode::kMaec, Mode::kPaec}) {
    PipelineOptions o;
    o.mode = mode;
    EXPECT_EQ(run_pipeline(text, la_casa_resources(), o).text, text);
  }
}

TEST(PipelineTest, PaecTagsAndCorrects) {
  PipelineOptions o;
  o.mode = Mode::kPaec;
  const PipelineResult r = run_pipeline("la cassa es", la_casa_resources(), o);
  EXPECT_EQ(r.text, "la casa es");
  ASSERT_TRUE(r.tags);
  EXPECT_EQ(r.tags->at(0), (std::vector<PosTag>{PosTag::kArt, PosTag::kNoun, PosTag::kVerb}));
}

TEST(PipelineTest, PaecNeedsTaggerOrGoldTags) {
  PipelineResources res = la_casa_resources();
  res.tagger.reset();
  PipelineOptions o;
  o.mode = Mode::kPaec;
  EXPECT_THROW(run_pipeline("la casa", res, o), ConfigError);
  const TagLines gold = {{PosTag::kArt, PosTag::kNoun}};
  EXPECT_EQ(run_pipeline("la casa", res, o, &gold).text, "la casa");
}

TEST(TagDocumentTest, TagsEachSentence) {
  TaggerModel m;
  m.lexical_table = {{"la", PosTag::kArt}, {"corre", PosTag::kVerb}};
  m.rules = {{PosTag::kArt, PosTag::kPron, RuleTemplate::kNextTag, "VERB"}};
  // The rule must not see across the sentence boundary.
  const TagLines tags = tag_document(normalize("Corre la. Corre la corre"), m);
  EXPECT_EQ(tags.at(0), (std::vector<PosTag>{PosTag::kVerb, PosTag::kArt, PosTag::kVerb,
                                              PosTag::kPron, PosTag::kVerb}));
}

// A whole run over the synthetic corpus: every injected non-word is found
// and the bookkeeping identities hold.
TEST(EndToEndTest, ClosedVocabularyRun) {
  const support::EndToEnd e2e = support::prepare_end_to_end(2026, 500, 7);
  for (Mode mode : {Mode::kMaec, Mode::kPaec}) {
    const support::RunScore s = support::run_and_score(e2e, mode);
    EXPECT_GT(s.nonword_errors, 0u);
    EXPECT_EQ(s.nonword_detected, s.nonword_errors);
    EXPECT_TRUE(consistency_check(s.counts).empty());
    EXPECT_EQ(s.counts.o, e2e.log.entries.size());
    EXPECT_GE(s.counts.c, 0.90);
  }
}

}  // namespace
}  // namespace textcorr
