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

#include "textcorr/evaluator.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "json.hpp"
#include "support/generators.h"
#include "textcorr/errors.h"

namespace textcorr {
namespace {

DetectionResult detections(std::vector<Detection> d) {
  DetectionResult r;
  r.flagged = std::move(d);
  return r;
}

EvalCounts table_row(std::uint64_t p, std::uint64_t o, std::uint64_t i,
                     std::uint64_t C, std::uint64_t E, std::uint64_t e,
                     std::uint64_t I, std::uint64_t F) {
  EvalCounts n;
  n.p = p, n.o = o, n.i = i, n.C = C, n.E = E, n.e = e, n.I = I, n.F = F;
  n.c = correction_rate(p, i);
  return n;
}

std::int64_t thousandths(double v) { return std::llround(v * 1000.0); }

TEST(CountOutcomesTest, TrueCorrection) {
  const EvalCounts n = count_outcomes({{"el", "gato"}}, {{"el", "gxto"}},
                                      {{"el", "gato"}}, detections({{0, 1, "gxto"}}));
  EXPECT_EQ(n.p, 2u);
  EXPECT_EQ(n.o, 1u);
  EXPECT_EQ(n.C, 1u);
  EXPECT_EQ(n.E, 1u);
  EXPECT_EQ(n.e, 0u);
  EXPECT_EQ(n.I, 0u);
  EXPECT_EQ(n.F, 0u);
  EXPECT_EQ(n.i, 0u);
  EXPECT_DOUBLE_EQ(n.c, 1.0);
}

TEST(CountOutcomesTest, FalseCorrection) {
  const EvalCounts n = count_outcomes({{"el", "gato"}}, {{"el", "gxto"}},
                                      {{"el", "pato"}}, detections({{0, 1, "gxto"}}));
  EXPECT_EQ(n.F, 1u);
  EXPECT_EQ(n.i, 1u);
  EXPECT_DOUBLE_EQ(n.c, 0.5);
}

TEST(CountOutcomesTest, NoErrors) {
  const EvalCounts n = count_outcomes({{"a", "b"}}, {{"a", "b"}}, {{"a", "b"}}, {});
  EXPECT_EQ(n.o, 0u);
  EXPECT_EQ(n.i, 0u);
  EXPECT_DOUBLE_EQ(n.c, 1.0);
  const EvalCounts empty = count_outcomes({}, {}, {}, {});
  EXPECT_EQ(empty.p, 0u);
  EXPECT_DOUBLE_EQ(empty.c, 1.0);
}

TEST(CountOutcomesTest, MissedAndIntroduced) {
  // gxto missed; "el" flagged and miscorrected; "come" flagged, left alone.
  const EvalCounts n = count_outcomes(
      {{"el", "gato", "come"}}, {{"el", "gxto", "come"}}, {{"al", "gxto", "come"}},
      detections({{0, 0, "el"}, {0, 2, "come"}}));
  EXPECT_EQ(n.e, 1u);
  EXPECT_EQ(n.I, 1u);
  EXPECT_EQ(n.E, 1u);
  EXPECT_EQ(n.flagged, 2u);
  EXPECT_EQ(n.i, 2u);
}

TEST(CountOutcomesTest, AlignmentErrorNamesLine) {
  try {
    count_outcomes({{"a"}, {"b", "c"}}, {{"a"}, {"b"}}, {{"a"}, {"b", "c"}}, {});
    FAIL() << "expected AlignmentError";
  } catch (const AlignmentError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(count_outcomes({{"a"}}, {{"a"}, {"b"}}, {{"a"}}, {}), AlignmentError);
}

TEST(CorrectionRateTest, PublishedRows) {
  EXPECT_EQ(thousandths(correction_rate(3266, 140)), 957);
  EXPECT_EQ(thousandths(correction_rate(3185, 104)), 967);
  EXPECT_DOUBLE_EQ(correction_rate(100, 0), 1.0);
  EXPECT_THROW(correction_rate(0, 0), ContractViolation);
  EXPECT_THROW(correction_rate(3, 4), ContractViolation);
}

TEST(ConsistencyCheckTest, Rows) {
  EXPECT_TRUE(consistency_check(table_row(3266, 323, 140, 202, 311, 31, 19, 90)).empty());
  const auto v = consistency_check(table_row(3266, 323, 370, 112, 474, 28, 167, 180));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0], (IdentityViolation{"E==C+F+I", 474, 459}));
  EXPECT_TRUE(consistency_check(EvalCounts{}).empty());
}

TEST(ReportTest, TextAndJson) {
  const EvalCounts n = table_row(3266, 323, 140, 202, 311, 31, 19, 90);
  const std::string text = format_report(n);
  EXPECT_NE(text.find("p=3266\n"), std::string::npos);
  EXPECT_NE(text.find("c=0.957\n"), std::string::npos);
  EXPECT_EQ(text.find("violation"), std::string::npos);
  const auto j = nlohmann::json::parse(format_report_json(n));
  EXPECT_EQ(j["C"], 202);
  EXPECT_DOUBLE_EQ(j["c"].get<double>(), 0.957);
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_NE(format_report(table_row(3266, 323, 370, 112, 474, 28, 167, 180))
                .find("violation=E==C+F+I (474 vs 459)"),
            std::string::npos);
}

// Random token-aligned triples.
struct Triple {
  TokenLines gold, corrupted, corrected;
  DetectionResult det;
};

Triple random_triple(std::mt19937_64& rng) {
  Triple t;
  const std::size_t lines = support::pick(rng, 5);
  for (std::size_t l = 0; l < lines; ++l) {
    auto& g = t.gold.emplace_back();
    auto& x = t.corrupted.emplace_back();
    auto& y = t.corrected.emplace_back();
    const std::size_t n = support::pick(rng, 7);
    for (std::size_t k = 0; k < n; ++k) {
      g.push_back("w" + std::to_string(support::pick(rng, 3)));
      x.push_back(support::pick(rng, 4) == 0 ? "x" : g.back());
      const bool detected = support::pick(rng, 3) == 0;
      if (detected) {
        t.det.flagged.push_back({l, k, x.back()});
        y.push_back("w" + std::to_string(support::pick(rng, 3)));
      } else {
        y.push_back(x.back());
      }
    }
  }
  return t;
}

TEST(EvaluatorPropertyTest, IdentitiesHold) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 2000; ++i) {
    const Triple t = random_triple(rng);
    const EvalCounts n = count_outcomes(t.gold, t.corrupted, t.corrected, t.det);
    EXPECT_TRUE(consistency_check(n).empty());
    EXPECT_GE(n.c, 0.0);
    EXPECT_LE(n.c, 1.0);
    EXPECT_EQ(n.c == 1.0, n.i == 0);
  }
}

TEST(EvaluatorPropertyTest, RateStrictlyDecreasesInResidualErrors) {
  for (std::uint64_t p : {1u, 7u, 3266u}) {
    for (std::uint64_t i = 1; i <= p && i < 200; ++i) {
      EXPECT_LT(correction_rate(p, i), correction_rate(p, i - 1));
    }
  }
}

TEST(EvaluatorPropertyTest, InvariantUnderRechunking) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 500; ++i) {
    const Triple t = random_triple(rng);
    // Flatten to one line, carrying detections along.
    Triple flat;
    flat.gold.emplace_back();
    flat.corrupted.emplace_back();
    flat.corrected.emplace_back();
    std::size_t offset = 0;
    for (std::size_t l = 0; l < t.gold.size(); ++l) {
      for (std::size_t k = 0; k < t.gold[l].size(); ++k) {
        flat.gold[0].push_back(t.gold[l][k]);
        flat.corrupted[0].push_back(t.corrupted[l][k]);
        flat.corrected[0].push_back(t.corrected[l][k]);
        if (t.det.contains(l, k)) flat.det.flagged.push_back({0, offset + k, ""});
      }
      offset += t.gold[l].size();
    }
    const EvalCounts a = count_outcomes(t.gold, t.corrupted, t.corrected, t.det);
    const EvalCounts b =
        count_outcomes(flat.gold, flat.corrupted, flat.corrected, flat.det);
    EXPECT_EQ(format_report(a), format_report(b));
  }
}

}  // namespace
}  // namespace textcorr
