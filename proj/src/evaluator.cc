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

#include <algorithm>
#include <cstdio>

#include "json.hpp"

#include "textcorr/errors.h"

namespace textcorr {
namespace {

std::string three_decimals(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

EvalCounts count_outcomes(const TokenLines& gold, const TokenLines& corrupted,
                          const TokenLines& corrected,
                          const DetectionResult& detections) {
  const std::size_t lines = std::max({gold.size(), corrupted.size(), corrected.size()});
  static const std::vector<std::string> kEmpty;
  auto line_of = [](const TokenLines& t, std::size_t l) -> const auto& {
    return l < t.size() ? t[l] : kEmpty;
  };
  EvalCounts out;
  for (std::size_t l = 0; l < lines; ++l) {
    const auto& g = line_of(gold, l);
    const auto& x = line_of(corrupted, l);
    const auto& y = line_of(corrected, l);
    if (g.size() != x.size() || g.size() != y.size()) {
      throw AlignmentError(l + 1, "token counts differ (gold " +
                                      std::to_string(g.size()) + ", corrupted " +
                                      std::to_string(x.size()) + ", corrected " +
                                      std::to_string(y.size()) + ")");
    }
    for (std::size_t k = 0; k < g.size(); ++k) {
      ++out.p;
      const bool changed = y[k] != g[k];
      if (x[k] != g[k]) {
        ++out.o;
        if (!detections.contains(l, k)) {
          ++out.e;
        } else if (changed) {
          ++out.F;
        } else {
          ++out.C;
        }
      } else if (changed) {
        ++out.I;
      }
    }
  }
  out.E = out.C + out.F + out.I;
  out.i = out.e + out.F + out.I;
  out.flagged = detections.size();
  out.c = out.p == 0 ? 1.0 : correction_rate(out.p, out.i);
  return out;
}

double correction_rate(std::uint64_t p, std::uint64_t i) {
  if (p == 0) throw ContractViolation("correction rate of an empty text");
  if (i > p) throw ContractViolation("more residual errors than words");
  return static_cast<double>(p - i) / static_cast<double>(p);
}

std::vector<IdentityViolation> consistency_check(const EvalCounts& n) {
  std::vector<IdentityViolation> out;
  if (n.E != n.C + n.F + n.I) out.push_back({"E==C+F+I", n.E, n.C + n.F + n.I});
  if (n.o != n.C + n.F + n.e) out.push_back({"o==C+F+e", n.o, n.C + n.F + n.e});
  if (n.i != n.e + n.F + n.I) out.push_back({"i==e+F+I", n.i, n.e + n.F + n.I});
  return out;
}

std::string format_report(const EvalCounts& n) {
  std::string out;
  auto put = [&](std::string_view key, std::uint64_t v) {
    out.append(key).append("=").append(std::to_string(v)).push_back('\n');
  };
  put("p", n.p);
  put("o", n.o);
  put("i", n.i);
  put("C", n.C);
  put("E", n.E);
  put("e", n.e);
  put("I", n.I);
  put("F", n.F);
  put("flagged", n.flagged);
  out += "c=" + three_decimals(n.c) + "\n";
  for (const IdentityViolation& v : consistency_check(n)) {
    out += "violation=" + v.identity + " (" + std::to_string(v.lhs) + " vs " +
           std::to_string(v.rhs) + ")\n";
  }
  return out;
}

std::string format_report_json(const EvalCounts& n) {
  nlohmann::ordered_json j;
  j["p"] = n.p;
  j["o"] = n.o;
  j["i"] = n.i;
  j["C"] = n.C;
  j["E"] = n.E;
  j["e"] = n.e;
  j["I"] = n.I;
  j["F"] = n.F;
  j["flagged"] = n.flagged;
  // Rounded like the text report so both views agree.
  j["c"] = std::stod(three_decimals(n.c));
  j["violations"] = nlohmann::json::array();
  for (const IdentityViolation& v : consistency_check(n)) {
    j["violations"].push_back({{"identity", v.identity}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  return j.dump(2) + "\n";
}

}  // namespace textcorr
