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

// Outcome bookkeeping for a correction run.
//
// Every token position is classified by comparing the gold, corrupted and
// corrected texts. A position is an error when corrupted differs from gold.
//
//   C  error, detected, corrected back to gold
//   F  error, detected, corrected to something else
//   e  error, not detected
//   I  not an error, but the output differs from gold
//   E  positions where the corrector acted: C + F + I
//   o  original errors
//   i  residual errors: e + F + I
//   c  (p - i) / p
//
// `flagged` is the raw size of the detection list. It can exceed E when the
// detector flags a correct word and no replacement is found for it.

#ifndef TEXTCORR_EVALUATOR_H_
#define TEXTCORR_EVALUATOR_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "textcorr/detector.h"

namespace textcorr {

using TokenLines = std::vector<std::vector<std::string>>;

struct EvalCounts {
  std::uint64_t p = 0;
  std::uint64_t o = 0;
  std::uint64_t C = 0;
  std::uint64_t E = 0;
  std::uint64_t e = 0;
  std::uint64_t I = 0;
  std::uint64_t F = 0;
  std::uint64_t i = 0;
  double c = 1.0;
  std::uint64_t flagged = 0;
};

EvalCounts count_outcomes(const TokenLines& gold, const TokenLines& corrupted,
                          const TokenLines& corrected,
                          const DetectionResult& detections);

// (p - i) / p. Throws ContractViolation when p is zero or i > p.
double correction_rate(std::uint64_t p, std::uint64_t i);

struct IdentityViolation {
  std::string identity;  // e.g. "E==C+F+I"
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;

  friend bool operator==(const IdentityViolation&,
                         const IdentityViolation&) = default;
};

std::vector<IdentityViolation> consistency_check(const EvalCounts& counts);

// key=value lines: p, o, i, C, E, e, I, F, flagged, then c with 3 decimals.
std::string format_report(const EvalCounts& counts);
std::string format_report_json(const EvalCounts& counts);

}  // namespace textcorr

#endif  // TEXTCORR_EVALUATOR_H_
