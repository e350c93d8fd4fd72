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

#include "textcorr/language_model.h"

#include <charconv>

#include "textcorr/errors.h"
#include "textcorr/io.h"
#include "textcorr/pos_tag.h"
#include "textcorr/unicode.h"

namespace textcorr {
namespace {

template <typename Range>
std::string join_key(const Range& parts) {
  std::string key;
  bool first = true;
  for (const auto& p : parts) {
    if (!first) key.push_back('\t');
    key.append(p);
    first = false;
  }
  return key;
}

bool valid_token(std::string_view token) {
  if (token.empty()) return false;
  return token.find_first_of("\t\n\r") == std::string_view::npos;
}

bool valid_tag_token(std::string_view token) {
  return token == kLineStart || parse_tag(token).has_value();
}

}  // namespace

std::string_view unit_name(NGramUnit unit) {
  return unit == NGramUnit::kWord ? "word" : "tag";
}

NGramModel::NGramModel(int order, NGramUnit unit) : order_(order), unit_(unit) {
  if (order != 2 && order != 3) {
    throw ConfigError("unsupported n-gram order " + std::to_string(order) +
                      " (expected 2 or 3)");
  }
}

void NGramModel::check_length(std::size_t n, std::size_t expected) const {
  if (n != expected) {
    throw ContractViolation("n-gram of length " + std::to_string(n) +
                            " used with an order-" + std::to_string(order_) +
                            " model");
  }
}

void NGramModel::add(std::span<const std::string_view> gram,
                     std::uint64_t count) {
  check_length(gram.size(), static_cast<std::size_t>(order_));
  if (count == 0) throw ContractViolation("n-gram count must be positive");
  for (std::string_view tok : gram) {
    if (!valid_token(tok)) {
      throw ContractViolation("n-gram token is empty or contains a separator");
    }
    if (unit_ == NGramUnit::kTag && !valid_tag_token(tok)) {
      throw ContractViolation("not a POS tag: " + std::string(tok));
    }
    vocabulary_.emplace(tok);
  }
  counts_[join_key(gram)] += count;
  context_totals_[join_key(gram.first(gram.size() - 1))] += count;
  total_ += count;
}

void NGramModel::add_line(std::span<const std::string> tokens) {
  for (const std::string& tok : tokens) {
    if (!valid_token(tok)) {
      throw ContractViolation("n-gram token is empty or contains a separator");
    }
    vocabulary_.insert(tok);
  }
  const std::size_t n = static_cast<std::size_t>(order_);
  std::vector<std::string_view> gram(n);
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) gram[k] = tokens[i + k];
    add(gram);
  }
}

std::uint64_t NGramModel::count(std::span<const std::string_view> gram) const {
  check_length(gram.size(), static_cast<std::size_t>(order_));
  auto it = counts_.find(join_key(gram));
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t NGramModel::context_total(
    std::span<const std::string_view> context) const {
  check_length(context.size() + 1, static_cast<std::size_t>(order_));
  auto it = context_totals_.find(join_key(context));
  return it == context_totals_.end() ? 0 : it->second;
}

NGramModel build_ngram_model(const std::vector<std::vector<std::string>>& lines,
                             int order, NGramUnit unit) {
  NGramModel model(order, unit);
  for (const auto& line : lines) model.add_line(line);
  return model;
}

bool contains_ngram(const NGramModel& model,
                    std::span<const std::string_view> gram) {
  return model.count(gram) > 0;
}

double transition_probability(const NGramModel& model,
                              std::span<const std::string_view> context,
                              std::string_view next) {
  const std::uint64_t total = model.context_total(context);
  if (total == 0) return 0.0;
  std::vector<std::string_view> gram(context.begin(), context.end());
  gram.push_back(next);
  return static_cast<double>(model.count(gram)) / static_cast<double>(total);
}

std::string format_model(const NGramModel& model) {
  std::string out = "#order=" + std::to_string(model.order()) +
                    " unit=" + std::string(unit_name(model.unit())) + "\n";
  for (const auto& [key, count] : model.counts()) {
    out += key;
    out.push_back('\t');
    out += std::to_string(count);
    out.push_back('\n');
  }
  return out;
}

NGramModel parse_model(std::string_view text) {
  try {
    unicode::decode(text);
  } catch (const DecodeError& e) {
    throw ParseError(0, e.what());
  }
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing '#order=<n> unit=<u>' header");

  const std::string_view header = lines[0];
  int order = 0;
  NGramUnit unit = NGramUnit::kWord;
  if (header == "#order=2 unit=word") {
    order = 2, unit = NGramUnit::kWord;
  } else if (header == "#order=3 unit=word") {
    order = 3, unit = NGramUnit::kWord;
  } else if (header == "#order=2 unit=tag") {
    order = 2, unit = NGramUnit::kTag;
  } else if (header == "#order=3 unit=tag") {
    order = 3, unit = NGramUnit::kTag;
  } else {
    throw ParseError(1, "bad header '" + std::string(header) + "'");
  }

  NGramModel model(order, unit);
  std::vector<std::string_view> fields;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = lines[i];
    if (line.empty()) continue;
    fields.clear();
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != static_cast<std::size_t>(order) + 1) {
      throw ParseError(line_no, "expected " + std::to_string(order) +
                                    " tokens and a count");
    }
    const std::string_view count_field = fields.back();
    std::uint64_t count = 0;
    const auto [ptr, ec] = std::from_chars(
        count_field.data(), count_field.data() + count_field.size(), count);
    if (ec != std::errc() || ptr != count_field.data() + count_field.size() ||
        count_field.empty()) {
      throw ParseError(line_no, "count is not a decimal integer");
    }
    if (count == 0) throw ParseError(line_no, "count must be positive");
    fields.pop_back();
    for (std::string_view tok : fields) {
      if (tok.empty()) throw ParseError(line_no, "empty token");
      if (unit == NGramUnit::kTag && !valid_tag_token(tok)) {
        throw ParseError(line_no, "unknown tag '" + std::string(tok) + "'");
      }
    }
    if (model.count(fields) != 0) throw ParseError(line_no, "duplicate n-gram");
    model.add(fields, count);
  }
  return model;
}

void save_model(const NGramModel& model, const std::filesystem::path& path) {
  write_text_file(path, format_model(model));
}

NGramModel load_model(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_model(text);
  } catch (const ParseError& e) {
    throw e.in_file(path.string());
  }
}

}  // namespace textcorr
