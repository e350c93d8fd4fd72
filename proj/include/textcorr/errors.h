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

#ifndef TEXTCORR_ERRORS_H_
#define TEXTCORR_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace textcorr {

// Root of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input bytes are not valid UTF-8.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t byte_offset, const std::string& what)
      : Error("invalid UTF-8 at byte " + std::to_string(byte_offset) + ": " +
              what),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// A text resource (model, lexicon, corpus) is malformed. Line numbers are
// 1-based; 0 means the location is unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

  // Same error, message prefixed with the file it came from.
  ParseError in_file(const std::string& file) const {
    return ParseError(line_, file + ": " + what(), Raw{});
  }

 private:
  struct Raw {};
  ParseError(std::size_t line, const std::string& message, Raw)
      : Error(message), line_(line) {}

  std::size_t line_;
};

// Unsupported or incomplete configuration (bad n-gram order, missing
// resource for the requested mode, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Texts that should be token-aligned are not.
class AlignmentError : public Error {
 public:
  AlignmentError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A normalization record does not match the document it is applied to.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace textcorr

#endif  // TEXTCORR_ERRORS_H_
