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

// Small UTF-8 / Unicode helpers. Character properties come from ICU; all
// strings crossing the public API are UTF-8 std::string.

#ifndef TEXTCORR_UNICODE_H_
#define TEXTCORR_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace textcorr::unicode {

// Strict decoder: rejects overlong forms, surrogates and values above
// U+10FFFF. Throws DecodeError carrying the offending byte offset.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t c);

// Number of scalar values in a valid UTF-8 string.
std::size_t length(std::string_view utf8);

bool is_space(char32_t c);
// General categories P* and S*.
bool is_punct_or_symbol(char32_t c);
bool is_letter(char32_t c);

char32_t to_lower(char32_t c);
char32_t to_upper(char32_t c);

// True when c is an uppercase character whose simple lowercase maps back to
// c under simple uppercasing. Only such characters are folded, so the fold
// can always be undone.
bool has_reversible_lowercase(char32_t c);

// Folds every character for which has_reversible_lowercase holds.
std::string lowercase(std::string_view utf8);
std::u32string lowercase(std::u32string_view text);

std::string to_nfc(std::string_view utf8);

// Base letter of a precomposed character ('á' -> 'a', 'ñ' -> 'n'); other
// characters are returned unchanged.
char32_t strip_diacritic(char32_t c);

}  // namespace textcorr::unicode

#endif  // TEXTCORR_UNICODE_H_
