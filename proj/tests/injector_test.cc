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

#include "textcorr/injector.h"

#include <array>
#include <map>

#include <gtest/gtest.h>

#include "textcorr/errors.h"
#include "textcorr/io.h"
#include "textcorr/similarity.h"
#include "textcorr/unicode.h"

namespace textcorr {
namespace {

std::string numbered_words(std::size_t n) {
  static const std::array<std::string_view, 8> kWords = {
      "gato", "perro", "casa", "mesa", "camino", "libro", "puerta", "cielo"};
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out.push_back(' ');
    out += kWords[i % kWords.size()];
  }
  return out;
}

TEST(ApplyEditTest, Examples) {
  EXPECT_EQ(apply_edit("gato", EditOp::kDeletion, 1), "gto");
  EXPECT_EQ(apply_edit("gato", EditOp::kTransposition, 0), "agto");
  EXPECT_EQ(apply_edit("gato", EditOp::kSegmentation, 2), "ga to");
  EXPECT_EQ(apply_edit("gato", EditOp::kInsertion, 4, U's'), "gatos");
  EXPECT_EQ(apply_edit("gato", EditOp::kDuplication, 1), "gaato");
  EXPECT_EQ(apply_edit("gato", EditOp::kSubstitution, 0, U'p'), "pato");
  EXPECT_EQ(apply_edit("niño", EditOp::kSubstitution, 2, U'n'), "nino");
  EXPECT_EQ(apply_edit("el gato", EditOp::kUnion, 2), "elgato");
}

TEST(ApplyEditTest, InvalidPositions) {
  EXPECT_THROW(apply_edit("gato", EditOp::kInsertion, 5, U'a'), ContractViolation);
  EXPECT_THROW(apply_edit("gato", EditOp::kDeletion, 4), ContractViolation);
  EXPECT_THROW(apply_edit("gato", EditOp::kTransposition, 3), ContractViolation);
  EXPECT_THROW(apply_edit("gato", EditOp::kSegmentation, 0), ContractViolation);
  EXPECT_THROW(apply_edit("gato", EditOp::kSegmentation, 4), ContractViolation);
  EXPECT_THROW(apply_edit("gato", EditOp::kSubstitution, 1, U'a'), ContractViolation);
  EXPECT_THROW(apply_edit("gato", EditOp::kUnion, 1), ContractViolation);
}

TEST(OpNameTest, RoundTrip) {
  for (EditOp op : kAllOps) EXPECT_EQ(parse_op(op_name(op)), op);
  EXPECT_FALSE(parse_op("SWAP"));
}

TEST(FormatTenPerLineTest, Examples) {
  const std::string twenty = format_ten_per_line(numbered_words(20));
  EXPECT_EQ(split_lines(twenty).size(), 2u);
  const std::string thirteen_text = format_ten_per_line(numbered_words(13));
  const auto thirteen = split_lines(thirteen_text);
  ASSERT_EQ(thirteen.size(), 2u);
  EXPECT_EQ(split_words(thirteen[0]).size(), 10u);
  EXPECT_EQ(split_words(thirteen[1]).size(), 3u);
  EXPECT_EQ(format_ten_per_line(""), "");
  EXPECT_EQ(format_ten_per_line("  a\n\tb  "), "a b\n");
}

TEST(InjectTest, OneTokenPerLineChanges) {
  const std::string formatted = format_ten_per_line(numbered_words(200));
  const InjectionResult r = inject(formatted, 7);
  const auto before = split_lines(formatted);
  const auto after = split_lines(r.text);
  ASSERT_EQ(before.size(), after.size());
  ASSERT_EQ(r.log.entries.size(), before.size());
  for (std::size_t l = 0; l < before.size(); ++l) {
    const auto a = split_words(before[l]);
    const auto b = split_words(after[l]);
    ASSERT_EQ(a.size(), b.size());
    std::size_t diffs = 0;
    for (std::size_t k = 0; k < a.size(); ++k) diffs += a[k] != b[k];
    EXPECT_EQ(diffs, 1u);
    const InjectionEntry& e = r.log.entries[l];
    EXPECT_EQ(e.line_index, l);
    EXPECT_EQ(a[e.token_index], e.original);
    EXPECT_EQ(b[e.token_index], e.mutated);
  }
}

TEST(InjectTest, Deterministic) {
  const std::string formatted = format_ten_per_line(numbered_words(100));
  const InjectionResult a = inject(formatted, 7);
  const InjectionResult b = inject(formatted, 7);
  EXPECT_EQ(a.text, b.text);
  EXPECT_EQ(format_injection_log(a.log), format_injection_log(b.log));
  EXPECT_NE(inject(formatted, 8).text, a.text);
}

TEST(InjectTest, LogEntriesReplay) {
  const std::string formatted = format_ten_per_line(numbered_words(500));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (const InjectionEntry& e : inject(formatted, seed).log.entries) {
      EXPECT_NE(e.original, e.mutated);
      EXPECT_EQ(edit_distance(e.original, e.mutated), 1u);
      if (e.op == EditOp::kDeletion) {
        EXPECT_EQ(apply_edit(e.original, e.op, e.char_pos), e.mutated);
      } else {
        const char32_t c = unicode::decode(e.mutated)[e.char_pos];
        EXPECT_EQ(apply_edit(e.original, e.op, e.char_pos, c), e.mutated);
      }
    }
  }
}

TEST(InjectTest, SkipsLinesWithoutEligibleWords) {
  const InjectionResult r = inject("a y o\n\ncasa grande\n", 3);
  EXPECT_EQ(r.log.skipped_lines, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(r.log.entries.size(), 1u);
  EXPECT_EQ(r.log.entries[0].line_index, 2u);
  EXPECT_EQ(r.text.substr(0, 7), "a y o\n\n");
  EXPECT_EQ(r.text.back(), '\n');
}

TEST(InjectTest, EditsStayInsideTheWord) {
  // Punctuation attached to a word is never edited.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const InjectionResult r = inject("«casa», ¿perro?\n", seed);
    ASSERT_EQ(r.log.entries.size(), 1u);
    const std::string& m = r.log.entries[0].mutated;
    EXPECT_TRUE(m.rfind("«", 0) == 0 || m.rfind("¿", 0) == 0) << m;
  }
}

TEST(InjectTest, ExtendedModeUsesEveryOp) {
  const std::string formatted = format_ten_per_line(numbered_words(3000));
  std::map<EditOp, int> seen;
  const InjectionResult r = inject(formatted, 5, kAllOps);
  for (const InjectionEntry& e : r.log.entries) {
    ++seen[e.op];
    if (e.op == EditOp::kUnion) {
      EXPECT_EQ(e.original.find(' ') != std::string::npos, true);
      EXPECT_EQ(e.mutated.find(' '), std::string::npos);
    }
    if (e.op == EditOp::kSegmentation) {
      EXPECT_NE(e.mutated.find(' '), std::string::npos);
    }
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(InjectionLogTest, RoundTrip) {
  const InjectionResult r = inject("casa grande\n\nperro\n", 9);
  const InjectionLog parsed = parse_injection_log(format_injection_log(r.log));
  EXPECT_EQ(format_injection_log(parsed), format_injection_log(r.log));
  EXPECT_EQ(parsed.skipped_lines, r.log.skipped_lines);
  EXPECT_THROW(parse_injection_log("0\t0\tSWAP\t1\ta\tb\n"), ParseError);
  EXPECT_THROW(parse_injection_log("0\t0\tDELETION\n"), ParseError);
}

}  // namespace
}  // namespace textcorr
