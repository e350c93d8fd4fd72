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

#ifndef TEXTCORR_IO_H_
#define TEXTCORR_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace textcorr {

// Whole-file helpers; both throw IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view data);

// Splits on '\n', dropping a trailing '\r' from every line. A final newline
// does not start an extra line.
std::vector<std::string_view> split_lines(std::string_view text);

// Splits on runs of ASCII or Unicode whitespace.
std::vector<std::string> split_words(std::string_view text);

}  // namespace textcorr

#endif  // TEXTCORR_IO_H_
