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

#include "textcorr/similarity.h"

#include <random>

#include <gtest/gtest.h>

#include "support/generators.h"
#include "support/oracles.h"
#include "textcorr/errors.h"
#include "textcorr/unicode.h"

namespace textcorr {
namespace {

TEST(EditDistanceTest, Examples) {
  EXPECT_EQ(edit_distance("abc", "abc"), 0u);
  EXPECT_EQ(edit_distance("casa", "caza"), 1u);
  EXPECT_EQ(edit_distance("kitten", "sitting"), 3u);
  EXPECT_EQ(edit_distance("", "abc"), 3u);
  EXPECT_EQ(edit_distance("abc", ""), 3u);
}

TEST(EditDistanceTest, CountsCharactersNotBytes) {
  EXPECT_EQ(edit_distance("niño", "nino"), 1u);
  EXPECT_EQ(edit_distance("ñ", ""), 1u);
}

TEST(EditDistancePropertyTest, MatchesFullTableOracle) {
  std::mt19937_64 rng(1);
  const std::u32string_view alphabet = U"abcñé";
  for (int i = 0; i < 3000; ++i) {
    const std::u32string a = support::random_string(rng, alphabet, 10);
    const std::u32string b = support::random_string(rng, alphabet, 10);
    ASSERT_EQ(edit_distance(a, b), support::full_dp_edit_distance(a, b))
        << unicode::encode(a) << " / " << unicode::encode(b);
    ASSERT_EQ(edit_distance(unicode::encode(a), unicode::encode(b)),
              edit_distance(a, b));
  }
}

TEST(EditDistancePropertyTest, MetricAxioms) {
  std::mt19937_64 rng(2);
  const std::u32string_view alphabet = U"abcd";
  for (int i = 0; i < 2000; ++i) {
    const std::u32string a = support::random_string(rng, alphabet, 8);
    const std::u32string b = support::random_string(rng, alphabet, 8);
    const std::u32string c = support::random_string(rng, alphabet, 8);
    const std::size_t ab = edit_distance(a, b);
    EXPECT_EQ(ab, edit_distance(b, a));
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_LE(edit_distance(a, c), ab + edit_distance(b, c));
  }
}

TEST(SkeletonTest, Examples) {
  EXPECT_EQ(skeleton("informatics"), "infrmtcsoa");
  EXPECT_EQ(skeleton("casa"), "csa");
  EXPECT_EQ(skeleton("a"), "a");
}

TEST(SkeletonTest, StripsDiacritics) {
  EXPECT_EQ(skeleton("canción"), "cnaio");
  EXPECT_EQ(skeleton("niño"), "nio");
  EXPECT_EQ(skeleton("árbol"), "arblo");
}

TEST(SkeletonTest, EmptyWordIsContractViolation) {
  EXPECT_THROW(skeleton(""), ContractViolation);
}

TEST(SkeletonPropertyTest, IdempotentAndNoLonger) {
  std::mt19937_64 rng(3);
  const std::u32string_view alphabet = U"abcdeinoustáéñü";
  for (int i = 0; i < 2000; ++i) {
    std::u32string w = support::random_string(rng, alphabet, 10);
    if (w.empty()) continue;
    const std::string s = skeleton(unicode::encode(w));
    EXPECT_EQ(skeleton(s), s);
    EXPECT_LE(unicode::length(s), w.size());
  }
}

}  // namespace
}  // namespace textcorr
