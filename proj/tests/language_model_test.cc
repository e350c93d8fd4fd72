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

#include "textcorr/language_model.h"

#include <cmath>
#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "support/generators.h"
#include "support/oracles.h"
#include "textcorr/errors.h"

namespace textcorr {
namespace {

using Lines = std::vector<std::vector<std::string>>;
using Views = std::vector<std::string_view>;

const Lines kPhrase = {{"computing", "is", "not", "easy"}};

TEST(NGramModelTest, PhraseBigrams) {
  const NGramModel m = build_ngram_model(kPhrase, 2, NGramUnit::kWord);
  EXPECT_EQ(m.counts().size(), 3u);
  EXPECT_EQ(m.count({"computing", "is"}), 1u);
  EXPECT_EQ(m.count({"is", "not"}), 1u);
  EXPECT_EQ(m.count({"not", "easy"}), 1u);
  EXPECT_EQ(m.total(), 3u);
  EXPECT_EQ(m.vocabulary().size(), 4u);
}

TEST(NGramModelTest, PhraseTrigrams) {
  const NGramModel m = build_ngram_model(kPhrase, 3, NGramUnit::kWord);
  EXPECT_EQ(m.counts().size(), 2u);
  EXPECT_EQ(m.count({"computing", "is", "not"}), 1u);
  EXPECT_EQ(m.count({"is", "not", "easy"}), 1u);
}

TEST(NGramModelTest, RepeatedBigrams) {
  const NGramModel m = build_ngram_model({{"a", "b", "a", "b"}}, 2, NGramUnit::kWord);
  EXPECT_EQ(m.counts().size(), 2u);
  EXPECT_EQ(m.count({"a", "b"}), 2u);
  EXPECT_EQ(m.count({"b", "a"}), 1u);
}

TEST(NGramModelTest, NoCrossLineNgrams) {
  const NGramModel m = build_ngram_model({{"a", "b"}, {"c"}}, 2, NGramUnit::kWord);
  EXPECT_EQ(m.count({"b", "c"}), 0u);
  EXPECT_EQ(m.total(), 1u);
}

TEST(NGramModelTest, UnsupportedOrder) {
  EXPECT_THROW(NGramModel(4, NGramUnit::kWord), ConfigError);
  EXPECT_THROW(NGramModel(1, NGramUnit::kWord), ConfigError);
}

TEST(NGramModelTest, ContainsNgram) {
  const NGramModel m = build_ngram_model(kPhrase, 2, NGramUnit::kWord);
  EXPECT_TRUE(contains_ngram(m, {"is", "not"}));
  EXPECT_FALSE(contains_ngram(m, {"easy", "computing"}));
  EXPECT_FALSE(contains_ngram(NGramModel(2, NGramUnit::kWord), {"a", "b"}));
  EXPECT_THROW(contains_ngram(m, {"is", "not", "easy"}), ContractViolation);
}

TEST(NGramModelTest, TransitionProbability) {
  const NGramModel m = build_ngram_model({{"a", "b", "a", "b"}}, 2, NGramUnit::kWord);
  const Views a = {"a"}, b = {"b"}, z = {"z"};
  EXPECT_DOUBLE_EQ(transition_probability(m, a, "b"), 1.0);
  EXPECT_DOUBLE_EQ(transition_probability(m, b, "a"), 1.0);
  EXPECT_DOUBLE_EQ(transition_probability(m, z, "a"), 0.0);
  EXPECT_DOUBLE_EQ(transition_probability(m, a, "a"), 0.0);
}

TEST(NGramModelTest, TagModelRejectsUnknownTags) {
  NGramModel m(2, NGramUnit::kTag);
  m.add_line(std::vector<std::string>{"<I>", "ART", "NOUN"});
  EXPECT_EQ(m.count({"ART", "NOUN"}), 1u);
  EXPECT_THROW(m.add_line(std::vector<std::string>{"ART", "XXX"}),
               ContractViolation);
}

TEST(ModelFileTest, RoundTrip) {
  const NGramModel m = build_ngram_model(kPhrase, 2, NGramUnit::kWord);
  EXPECT_EQ(parse_model(format_model(m)), m);
  const auto path = std::filesystem::temp_directory_path() / "textcorr_lm_test.txt";
  save_model(m, path);
  const NGramModel loaded = load_model(path);
  EXPECT_EQ(loaded, m);
  EXPECT_EQ(loaded.vocabulary(), m.vocabulary());
  std::filesystem::remove(path);
}

TEST(ModelFileTest, HeaderOnlyIsEmptyModel) {
  const NGramModel m = parse_model("#order=3 unit=tag\n");
  EXPECT_TRUE(m.empty());
  EXPECT_EQ(m.order(), 3);
  EXPECT_EQ(m.unit(), NGramUnit::kTag);
}

TEST(ModelFileTest, Errors) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_model(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("#order=4 unit=word\n"), 1u);
  EXPECT_EQ(line_of("#order=2 unit=word\na\tb\t1\nb\tc\t0\n"), 3u);
  EXPECT_EQ(line_of("#order=2 unit=word\na\tb\tx\n"), 2u);
  EXPECT_EQ(line_of("#order=2 unit=word\na\tb\t-1\n"), 2u);
  EXPECT_EQ(line_of("#order=2 unit=word\na\t1\n"), 2u);
  EXPECT_EQ(line_of("#order=2 unit=word\na\tb\t1\na\tb\t2\n"), 3u);
  EXPECT_EQ(line_of("#order=2 unit=tag\nART\tXXX\t1\n"), 2u);
}

// Properties over random corpora.

Lines random_corpus(std::mt19937_64& rng) {
  Lines lines(support::pick(rng, 6));
  for (auto& line : lines) {
    const std::size_t n = support::pick(rng, 9);
    for (std::size_t k = 0; k < n; ++k) {
      line.push_back(std::string(1, static_cast<char>('a' + support::pick(rng, 4))));
    }
  }
  return lines;
}

TEST(NGramModelPropertyTest, CountSumAndOracle) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const Lines lines = random_corpus(rng);
    for (int order : {2, 3}) {
      const NGramModel m = build_ngram_model(lines, order, NGramUnit::kWord);
      std::uint64_t expected = 0;
      for (const auto& l : lines) {
        expected += l.size() >= static_cast<std::size_t>(order) ? l.size() - order + 1 : 0;
      }
      ASSERT_EQ(m.total(), expected);
      const auto oracle = support::naive_ngram_counts(lines, order);
      ASSERT_EQ(m.counts().size(), oracle.size());
      for (const auto& [gram, count] : oracle) {
        const Views v(gram.begin(), gram.end());
        ASSERT_EQ(m.count(v), count);
      }
    }
  }
}

TEST(NGramModelPropertyTest, ProbabilitiesSumToOne) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    const NGramModel m = build_ngram_model(random_corpus(rng), 2, NGramUnit::kWord);
    for (const std::string& c : m.vocabulary()) {
      const Views ctx = {c};
      if (m.context_total(ctx) == 0) continue;
      double sum = 0.0;
      for (const std::string& next : m.vocabulary()) {
        const double p = transition_probability(m, ctx, next);
        EXPECT_EQ(contains_ngram(m, {c, next}), p > 0.0);
        sum += p;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(NGramModelPropertyTest, FileRoundTrip) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const NGramModel m = build_ngram_model(random_corpus(rng), 3, NGramUnit::kWord);
    EXPECT_EQ(parse_model(format_model(m)), m);
  }
}

}  // namespace
}  // namespace textcorr
