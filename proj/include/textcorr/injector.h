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

// Synthetic typing-error injection.
//
// The test protocol re-flows a text to ten words per line and then corrupts
// exactly one word per line with one random insertion, deletion or
// substitution. The other word-level operations (duplication,
// transposition, segmentation, union) are available for extended runs.

#ifndef TEXTCORR_INJECTOR_H_
#define TEXTCORR_INJECTOR_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace textcorr {

enum class EditOp {
  kInsertion,
  kDuplication,
  kDeletion,
  kSubstitution,
  kTransposition,
  kSegmentation,
  kUnion,
};

inline constexpr std::array<EditOp, 3> kProtocolOps = {
    EditOp::kInsertion, EditOp::kDeletion, EditOp::kSubstitution};
inline constexpr std::array<EditOp, 7> kAllOps = {
    EditOp::kInsertion,     EditOp::kDuplication,  EditOp::kDeletion,
    EditOp::kSubstitution,  EditOp::kTransposition, EditOp::kSegmentation,
    EditOp::kUnion};

std::string_view op_name(EditOp op);  // "INSERTION", ...
std::optional<EditOp> parse_op(std::string_view name);

// Pool for inserted and substituted characters: a-z plus á é í ó ú ü ñ.
std::u32string_view replacement_alphabet();

// Applies one edit at character position `char_pos`:
//   INSERTION     inserts `replacement` before char_pos (char_pos <= len)
//   DUPLICATION   doubles the character at char_pos
//   DELETION      removes it
//   SUBSTITUTION  replaces it with `replacement` (must differ)
//   TRANSPOSITION swaps char_pos and char_pos + 1
//   SEGMENTATION  inserts a space before char_pos (1 <= char_pos <= len - 1)
//   UNION         removes the space at char_pos, joining two words
// Throws ContractViolation for an invalid position or replacement.
std::string apply_edit(std::string_view word, EditOp op, std::size_t char_pos,
                       char32_t replacement = 0);

// Whitespace-separated words, ten per line, each line ending in '\n'.
std::string format_ten_per_line(std::string_view text);

struct InjectionEntry {
  std::size_t line_index = 0;
  std::size_t token_index = 0;  // whitespace-token index within the line
  EditOp op = EditOp::kSubstitution;
  std::size_t char_pos = 0;
  std::string original;  // for UNION: both words with the separating space
  std::string mutated;

  friend bool operator==(const InjectionEntry&, const InjectionEntry&) = default;
};

struct InjectionLog {
  std::vector<InjectionEntry> entries;
  std::vector<std::size_t> skipped_lines;  // lines with no usable word

  friend bool operator==(const InjectionLog&, const InjectionLog&) = default;
};

struct InjectionResult {
  std::string text;
  InjectionLog log;
};

// Corrupts one word per line. Only words with at least two non-punctuation
// characters are eligible, and edits stay inside the word's
// punctuation-free core, so the normalized token count never changes under
// the protocol ops. Deterministic for a given (text, seed, ops).
InjectionResult inject(std::string_view formatted, std::uint64_t seed,
                       std::span<const EditOp> ops = kProtocolOps);

// TSV `line<TAB>token<TAB>op<TAB>char_pos<TAB>original<TAB>mutated` with a
// '#' header; skipped lines appear as `#noop<TAB><line>`.
std::string format_injection_log(const InjectionLog& log);
InjectionLog parse_injection_log(std::string_view text);

}  // namespace textcorr

#endif  // TEXTCORR_INJECTOR_H_
