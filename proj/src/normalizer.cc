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

#include "textcorr/normalizer.h"

#include <algorithm>
#include <optional>

#include "textcorr/errors.h"
#include "textcorr/io.h"
#include "textcorr/unicode.h"

namespace textcorr {
namespace {

using unicode::encode;

bool is_sentence_terminator(char32_t c) { return c == '.' || c == '?' || c == '!'; }

bool has_terminator(std::u32string_view s) {
  return std::any_of(s.begin(), s.end(), is_sentence_terminator);
}

bool all_punct(std::u32string_view s) {
  return std::all_of(s.begin(), s.end(), unicode::is_punct_or_symbol);
}

struct AbbrevMatch {
  std::u32string original;  // abbreviation as written
  std::u32string after;     // trailing punctuation following it
  const std::string* expansion = nullptr;
};

// `rest` is a chunk with its leading punctuation removed. The longest prefix
// ending in '.' whose lowercase form is a table key, followed only by
// punctuation, is an abbreviation.
std::optional<AbbrevMatch> match_abbreviation(std::u32string_view rest,
                                              const AbbreviationTable& table) {
  if (table.empty()) return std::nullopt;
  for (std::size_t j = rest.size(); j-- > 0;) {
    if (rest[j] != '.') continue;
    const std::u32string_view candidate = rest.substr(0, j + 1);
    const std::u32string_view after = rest.substr(j + 1);
    if (!all_punct(after)) continue;
    auto it = table.find(encode(unicode::lowercase(candidate)));
    if (it == table.end()) continue;
    return AbbrevMatch{std::u32string(candidate), std::u32string(after),
                       &it->second};
  }
  return std::nullopt;
}

class LineBuilder {
 public:
  LineBuilder(std::size_t line_index, Document& doc)
      : line_index_(line_index), doc_(doc) {
    doc_.lines.emplace_back();
    doc_.record.gaps.emplace_back(1);
  }

  void add_gap(std::u32string_view text) { gap().append(encode(text)); }

  void add_chunk(std::u32string_view chunk, const AbbreviationTable& table) {
    std::size_t lead = 0;
    while (lead < chunk.size() && unicode::is_punct_or_symbol(chunk[lead])) {
      ++lead;
    }
    if (lead == chunk.size()) {
      // Free-standing punctuation stays in the gap.
      if (has_terminator(chunk)) mark_last_sentence_final();
      add_gap(chunk);
      return;
    }
    const std::u32string_view leading = chunk.substr(0, lead);
    const std::u32string_view rest = chunk.substr(lead);

    if (auto abbrev = match_abbreviation(rest, table)) {
      add_expansion(leading, *abbrev);
      return;
    }

    std::size_t tail = rest.size();
    while (tail > 0 && unicode::is_punct_or_symbol(rest[tail - 1])) --tail;
    const std::u32string_view core = rest.substr(0, tail);
    const std::u32string_view trailing = rest.substr(tail);

    const std::size_t index = line().size();
    CaseMark mark{line_index_, index, {}};
    for (std::size_t k = 0; k < core.size(); ++k) {
      if (unicode::has_reversible_lowercase(core[k])) mark.positions.push_back(k);
    }
    if (!mark.positions.empty()) doc_.record.case_marks.push_back(std::move(mark));

    Token token;
    token.surface = encode(chunk);
    token.normalized = encode(unicode::lowercase(core));
    token.sentence_final = has_terminator(trailing);
    push_token(std::move(token), leading, trailing);
  }

  void finish() {
    if (!line().empty()) line().back().sentence_final = true;
  }

 private:
  std::vector<Token>& line() { return doc_.lines.back(); }
  std::string& gap() { return doc_.record.gaps.back().back(); }

  void mark_last_sentence_final() {
    if (!line().empty()) line().back().sentence_final = true;
  }

  void push_token(Token token, std::u32string_view leading,
                  std::u32string_view trailing) {
    const std::size_t index = line().size();
    token.line_index = line_index_;
    token.token_index = index;
    if (!leading.empty()) {
      doc_.record.punct_marks.push_back(
          {line_index_, index, Attachment::kLeading, encode(leading)});
    }
    if (!trailing.empty()) {
      doc_.record.punct_marks.push_back(
          {line_index_, index, Attachment::kTrailing, encode(trailing)});
    }
    line().push_back(std::move(token));
    doc_.record.gaps.back().emplace_back();
  }

  void add_expansion(std::u32string_view leading, const AbbrevMatch& abbrev) {
    const std::vector<std::string> words = split_words(*abbrev.expansion);
    if (words.empty()) {
      // An empty expansion cannot be represented as tokens; keep the text.
      add_gap(leading);
      add_gap(abbrev.original);
      add_gap(abbrev.after);
      return;
    }
    const std::size_t first = line().size();
    for (std::size_t w = 0; w < words.size(); ++w) {
      Token token;
      token.surface = words[w];
      token.normalized = unicode::lowercase(words[w]);
      const bool last = w + 1 == words.size();
      token.sentence_final = last && has_terminator(abbrev.after);
      push_token(std::move(token), w == 0 ? leading : std::u32string_view{},
                 last ? std::u32string_view(abbrev.after)
                      : std::u32string_view{});
      if (!last) gap() = " ";
    }
    doc_.record.abbrev_expansions.push_back({line_index_, first, words.size(),
                                             encode(abbrev.original),
                                             *abbrev.expansion});
  }

  std::size_t line_index_;
  Document& doc_;
};

}  // namespace

AbbreviationTable parse_abbreviation_table(std::string_view text) {
  unicode::decode(text);
  AbbreviationTable table;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(line_no, "expected abbrev<TAB>expansion");
    }
    std::string key(line.substr(0, tab));
    const std::string expansion(line.substr(tab + 1));
    if (key.empty() || key.back() != '.') {
      throw ParseError(line_no, "abbreviation must end in '.'");
    }
    if (unicode::lowercase(key) != key) {
      throw ParseError(line_no, "abbreviation must be lowercase");
    }
    if (split_words(expansion).empty()) {
      throw ParseError(line_no, "empty expansion");
    }
    table[std::move(key)] = expansion;
  }
  return table;
}

AbbreviationTable load_abbreviation_table(const std::filesystem::path& path) {
  return parse_abbreviation_table(read_text_file(path));
}

Document normalize(std::string_view raw_text,
                   const AbbreviationTable& abbrev_table) {
  const std::u32string text = unicode::decode(raw_text);
  Document doc;
  if (text.empty()) return doc;

  std::u32string_view rest = text;
  if (rest.back() == '\n') {
    doc.record.final_newline = true;
    rest.remove_suffix(1);
  }

  std::size_t line_index = 0;
  while (true) {
    const std::size_t nl = rest.find(U'\n');
    const std::u32string_view line = rest.substr(0, nl);
    LineBuilder builder(line_index, doc);
    std::size_t i = 0;
    while (i < line.size()) {
      std::size_t j = i;
      const bool space = unicode::is_space(line[i]);
      while (j < line.size() && unicode::is_space(line[j]) == space) ++j;
      if (space) {
        builder.add_gap(line.substr(i, j - i));
      } else {
        builder.add_chunk(line.substr(i, j - i), abbrev_table);
      }
      i = j;
    }
    builder.finish();
    if (nl == std::u32string_view::npos) break;
    rest.remove_prefix(nl + 1);
    ++line_index;
  }
  return doc;
}

std::string denormalize(const Document& doc) {
  const NormalizationRecord& rec = doc.record;
  const std::size_t n_lines = doc.lines.size();
  if (rec.gaps.size() != n_lines) {
    throw InconsistencyError("record describes " +
                             std::to_string(rec.gaps.size()) +
                             " lines, document has " + std::to_string(n_lines));
  }
  for (std::size_t l = 0; l < n_lines; ++l) {
    if (rec.gaps[l].size() != doc.lines[l].size() + 1) {
      throw InconsistencyError("gap layout of line " + std::to_string(l) +
                               " does not match its token count");
    }
  }
  auto check = [&](std::size_t line, std::size_t token, const char* what) {
    if (line >= n_lines || token >= doc.lines[line].size()) {
      throw InconsistencyError(std::string(what) + " refers to missing token (" +
                               std::to_string(line) + ", " +
                               std::to_string(token) + ")");
    }
  };

  // Per-token decorations, indexed [line][token].
  struct Decor {
    std::string leading, trailing;
    const std::vector<std::size_t>* upper = nullptr;
    const AbbrevExpansion* abbrev = nullptr;
  };
  std::vector<std::vector<Decor>> decor(n_lines);
  for (std::size_t l = 0; l < n_lines; ++l) decor[l].resize(doc.lines[l].size());

  for (const CaseMark& m : rec.case_marks) {
    check(m.line_index, m.token_index, "case mark");
    decor[m.line_index][m.token_index].upper = &m.positions;
  }
  for (const PunctMark& m : rec.punct_marks) {
    check(m.line_index, m.token_index, "punctuation mark");
    Decor& d = decor[m.line_index][m.token_index];
    (m.attachment == Attachment::kLeading ? d.leading : d.trailing) += m.symbol;
  }
  for (const AbbrevExpansion& a : rec.abbrev_expansions) {
    if (a.token_count == 0) throw InconsistencyError("empty abbreviation span");
    check(a.line_index, a.token_index, "abbreviation");
    check(a.line_index, a.token_index + a.token_count - 1, "abbreviation");
    decor[a.line_index][a.token_index].abbrev = &a;
  }

  std::string out;
  for (std::size_t l = 0; l < n_lines; ++l) {
    if (l > 0) out.push_back('\n');
    const auto& line = doc.lines[l];
    const auto& gaps = rec.gaps[l];
    out += gaps[0];
    std::size_t t = 0;
    while (t < line.size()) {
      const Decor& d = decor[l][t];
      if (d.abbrev != nullptr) {
        const std::size_t last = t + d.abbrev->token_count - 1;
        out += d.leading;
        out += d.abbrev->original;
        out += decor[l][last].trailing;
        t = last + 1;
        out += gaps[t];
        continue;
      }
      std::u32string word = unicode::decode(line[t].normalized);
      if (d.upper != nullptr) {
        for (std::size_t pos : *d.upper) {
          if (pos < word.size()) word[pos] = unicode::to_upper(word[pos]);
        }
      }
      out += d.leading;
      out += encode(word);
      out += d.trailing;
      ++t;
      out += gaps[t];
    }
  }
  if (rec.final_newline) out.push_back('\n');
  return out;
}

std::vector<std::vector<std::string>> token_lines(const Document& doc) {
  std::vector<std::vector<std::string>> out;
  out.reserve(doc.lines.size());
  for (const auto& line : doc.lines) {
    auto& words = out.emplace_back();
    words.reserve(line.size());
    for (const Token& t : line) words.push_back(t.normalized);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> sentence_spans(
    const std::vector<Token>& line) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t begin = 0;
  for (std::size_t t = 0; t < line.size(); ++t) {
    if (line[t].sentence_final || t + 1 == line.size()) {
      spans.emplace_back(begin, t + 1);
      begin = t + 1;
    }
  }
  return spans;
}

}  // namespace textcorr
