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

// Reversible text normalization.
//
// normalize() splits raw text into lines and whitespace-delimited words,
// expands abbreviations, folds case and detaches leading/trailing
// punctuation. Everything it removes is kept in a NormalizationRecord so that
// denormalize() can rebuild the input byte-for-byte, or rebuild it around
// substituted words when the corrector has replaced some tokens.

#ifndef TEXTCORR_NORMALIZER_H_
#define TEXTCORR_NORMALIZER_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace textcorr {

struct Token {
  // Original form with punctuation attached. Tokens produced by an
  // abbreviation expansion carry the expansion word here.
  std::string surface;
  // Lowercase, punctuation stripped, never empty, no whitespace.
  std::string normalized;
  std::size_t line_index = 0;
  std::size_t token_index = 0;
  // Last word of a sentence ('.', '?' or '!' followed by whitespace or end of
  // line, or last word of its line).
  bool sentence_final = false;
};

enum class Attachment { kLeading, kTrailing };

struct CaseMark {
  std::size_t line_index = 0;
  std::size_t token_index = 0;
  // Character (scalar value) offsets into the normalized word.
  std::vector<std::size_t> positions;
};

struct PunctMark {
  std::size_t line_index = 0;
  std::size_t token_index = 0;
  Attachment attachment = Attachment::kTrailing;
  std::string symbol;  // the whole punctuation run, e.g. "¿" or ".»"
};

struct AbbrevExpansion {
  std::size_t line_index = 0;
  std::size_t token_index = 0;  // first expansion token
  std::size_t token_count = 0;  // words in the expansion
  std::string original;         // abbreviation as written, e.g. "Dr."
  std::string expansion;
};

struct NormalizationRecord {
  std::vector<CaseMark> case_marks;
  std::vector<PunctMark> punct_marks;
  std::vector<AbbrevExpansion> abbrev_expansions;
  // Raw text around the tokens of each line: whitespace plus any free-standing
  // punctuation. gaps[l].size() == lines[l].size() + 1.
  std::vector<std::vector<std::string>> gaps;
  bool final_newline = false;
};

struct Document {
  std::vector<std::vector<Token>> lines;
  NormalizationRecord record;
};

// Keys are lowercase and end in '.'.
using AbbreviationTable = std::map<std::string, std::string, std::less<>>;

// Reads `abbrev<TAB>expansion` lines. Throws IoError / ParseError.
AbbreviationTable load_abbreviation_table(const std::filesystem::path& path);
AbbreviationTable parse_abbreviation_table(std::string_view text);

// Throws DecodeError on malformed UTF-8.
Document normalize(std::string_view raw_text,
                   const AbbreviationTable& abbrev_table = {});

// Throws InconsistencyError when the record does not fit the token layout.
std::string denormalize(const Document& doc);

// Normalized words per line.
std::vector<std::vector<std::string>> token_lines(const Document& doc);

// Half-open [begin, end) token ranges of the sentences within one line.
std::vector<std::pair<std::size_t, std::size_t>> sentence_spans(
    const std::vector<Token>& line);

}  // namespace textcorr

#endif  // TEXTCORR_NORMALIZER_H_
