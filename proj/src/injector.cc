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

#include <charconv>
#include <random>

#include "textcorr/errors.h"
#include "textcorr/io.h"
#include "textcorr/unicode.h"

namespace textcorr {
namespace {

constexpr std::array<std::string_view, 7> kOpNames = {
    "INSERTION",     "DUPLICATION",  "DELETION", "SUBSTITUTION",
    "TRANSPOSITION", "SEGMENTATION", "UNION"};

constexpr std::u32string_view kAlphabet = U"abcdefghijklmnopqrstuvwxyzáéíóúüñ";

// Unbiased draw from [0, n). std::uniform_int_distribution is not portable
// across standard libraries, and runs must replay byte-for-byte.
std::size_t uniform_below(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod n
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return static_cast<std::size_t>(r % bound);
  }
}

struct Span {
  std::size_t begin = 0;  // character offsets within the line
  std::size_t end = 0;
  std::size_t core_begin = 0;  // offsets within the token
  std::size_t core_end = 0;
};

std::vector<Span> token_spans(std::u32string_view line) {
  std::vector<Span> spans;
  std::size_t i = 0;
  while (i < line.size()) {
    if (unicode::is_space(line[i])) {
      ++i;
      continue;
    }
    Span s;
    s.begin = i;
    while (i < line.size() && !unicode::is_space(line[i])) ++i;
    s.end = i;
    const std::u32string_view tok = line.substr(s.begin, s.end - s.begin);
    std::size_t cb = 0;
    while (cb < tok.size() && unicode::is_punct_or_symbol(tok[cb])) ++cb;
    std::size_t ce = tok.size();
    while (ce > cb && unicode::is_punct_or_symbol(tok[ce - 1])) --ce;
    s.core_begin = cb;
    s.core_end = ce;
    spans.push_back(s);
  }
  return spans;
}

bool op_applies(EditOp op, const std::vector<Span>& spans, std::size_t t,
                std::u32string_view line) {
  if (op != EditOp::kUnion) return true;
  if (t + 1 >= spans.size()) return false;
  return spans[t + 1].begin == spans[t].end + 1 && line[spans[t].end] == U' ';
}

}  // namespace

std::string_view op_name(EditOp op) {
  return kOpNames[static_cast<std::size_t>(op)];
}

std::optional<EditOp> parse_op(std::string_view name) {
  for (std::size_t i = 0; i < kOpNames.size(); ++i) {
    if (kOpNames[i] == name) return static_cast<EditOp>(i);
  }
  return std::nullopt;
}

std::u32string_view replacement_alphabet() { return kAlphabet; }

std::string apply_edit(std::string_view word, EditOp op, std::size_t char_pos,
                       char32_t replacement) {
  std::u32string s = unicode::decode(word);
  const std::size_t len = s.size();
  auto require = [&](bool ok) {
    if (!ok) {
      throw ContractViolation("invalid position " + std::to_string(char_pos) +
                              " for " + std::string(op_name(op)) + " on '" +
                              std::string(word) + "'");
    }
  };
  switch (op) {
    case EditOp::kInsertion:
      require(char_pos <= len);
      if (replacement == 0) throw ContractViolation("insertion needs a character");
      s.insert(s.begin() + char_pos, replacement);
      break;
    case EditOp::kDuplication:
      require(char_pos < len);
      s.insert(s.begin() + char_pos, s[char_pos]);
      break;
    case EditOp::kDeletion:
      require(char_pos < len);
      s.erase(char_pos, 1);
      break;
    case EditOp::kSubstitution:
      require(char_pos < len);
      if (replacement == 0 || replacement == s[char_pos]) {
        throw ContractViolation("substitution must change the character");
      }
      s[char_pos] = replacement;
      break;
    case EditOp::kTransposition:
      require(len >= 2 && char_pos < len - 1);
      std::swap(s[char_pos], s[char_pos + 1]);
      break;
    case EditOp::kSegmentation:
      require(char_pos >= 1 && char_pos + 1 <= len && len >= 2);
      s.insert(s.begin() + char_pos, U' ');
      break;
    case EditOp::kUnion:
      require(char_pos < len && s[char_pos] == U' ');
      s.erase(char_pos, 1);
      break;
  }
  return unicode::encode(s);
}

std::string format_ten_per_line(std::string_view text) {
  const std::vector<std::string> words = split_words(text);
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    out += words[i];
    out.push_back(i % 10 == 9 || i + 1 == words.size() ? '\n' : ' ');
  }
  return out;
}

InjectionResult inject(std::string_view formatted, std::uint64_t seed,
                       std::span<const EditOp> ops) {
  if (ops.empty()) throw ContractViolation("no edit operations to draw from");
  const std::u32string text = unicode::decode(formatted);
  std::mt19937_64 rng(seed);
  InjectionResult result;
  std::u32string out;
  out.reserve(text.size() + 64);

  std::size_t line_index = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find(U'\n', start);
    const bool has_nl = nl != std::u32string::npos;
    if (!has_nl) nl = text.size();
    std::u32string line = text.substr(start, nl - start);

    const std::vector<Span> spans = token_spans(line);
    std::vector<std::size_t> eligible;
    for (std::size_t t = 0; t < spans.size(); ++t) {
      if (spans[t].core_end - spans[t].core_begin >= 2) eligible.push_back(t);
    }

    bool done = false;
    if (!eligible.empty()) {
      const std::size_t t = eligible[uniform_below(rng, eligible.size())];
      std::vector<EditOp> usable;
      for (EditOp op : ops) {
        if (op_applies(op, spans, t, line)) usable.push_back(op);
      }
      if (!usable.empty()) {
        const EditOp op = usable[uniform_below(rng, usable.size())];
        const Span& s = spans[t];
        const std::size_t core = s.core_end - s.core_begin;
        std::size_t pos = 0;
        std::size_t span_end = s.end;
        switch (op) {
          case EditOp::kInsertion:
            pos = s.core_begin + uniform_below(rng, core + 1);
            break;
          case EditOp::kTransposition:
            pos = s.core_begin + uniform_below(rng, core - 1);
            break;
          case EditOp::kSegmentation:
            pos = s.core_begin + 1 + uniform_below(rng, core - 1);
            break;
          case EditOp::kUnion:
            pos = s.end - s.begin;
            span_end = spans[t + 1].end;
            break;
          default:
            pos = s.core_begin + uniform_below(rng, core);
            break;
        }
        const std::u32string original = line.substr(s.begin, span_end - s.begin);
        char32_t replacement = 0;
        if (op == EditOp::kInsertion) {
          replacement = kAlphabet[uniform_below(rng, kAlphabet.size())];
        } else if (op == EditOp::kSubstitution) {
          std::u32string pool;
          for (char32_t c : kAlphabet) {
            if (c != original[pos]) pool.push_back(c);
          }
          replacement = pool[uniform_below(rng, pool.size())];
        }
        const std::string original_utf8 = unicode::encode(original);
        std::string mutated = apply_edit(original_utf8, op, pos, replacement);
        line.replace(s.begin, span_end - s.begin, unicode::decode(mutated));
        result.log.entries.push_back(
            {line_index, t, op, pos, original_utf8, std::move(mutated)});
        done = true;
      }
    }
    if (!done) result.log.skipped_lines.push_back(line_index);

    out += line;
    if (has_nl) out.push_back(U'\n');
    start = nl + 1;
    ++line_index;
  }
  result.text = unicode::encode(out);
  return result;
}

std::string format_injection_log(const InjectionLog& log) {
  std::string out = "#line\ttoken\top\tchar_pos\toriginal\tmutated\n";
  for (const InjectionEntry& e : log.entries) {
    out += std::to_string(e.line_index) + '\t' + std::to_string(e.token_index) +
           '\t' + std::string(op_name(e.op)) + '\t' +
           std::to_string(e.char_pos) + '\t' + e.original + '\t' + e.mutated +
           '\n';
  }
  for (std::size_t line : log.skipped_lines) {
    out += "#noop\t" + std::to_string(line) + '\n';
  }
  return out;
}

InjectionLog parse_injection_log(std::string_view text) {
  InjectionLog log;
  std::size_t line_no = 0;
  auto number = [&](std::string_view field) {
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError(line_no, "bad number '" + std::string(field) + "'");
    }
    return value;
  };
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields[0] == "#noop") {
      if (fields.size() != 2) throw ParseError(line_no, "malformed #noop line");
      log.skipped_lines.push_back(number(fields[1]));
      continue;
    }
    if (line.front() == '#') continue;
    if (fields.size() != 6) throw ParseError(line_no, "expected 6 fields");
    const auto op = parse_op(fields[2]);
    if (!op) throw ParseError(line_no, "unknown op '" + std::string(fields[2]) + "'");
    log.entries.push_back({number(fields[0]), number(fields[1]), *op,
                           number(fields[3]), std::string(fields[4]),
                           std::string(fields[5])});
  }
  return log;
}

}  // namespace textcorr
