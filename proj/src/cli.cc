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

#include "textcorr/cli.h"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "textcorr/errors.h"
#include "textcorr/evaluator.h"
#include "textcorr/injector.h"
#include "textcorr/io.h"
#include "textcorr/language_model.h"
#include "textcorr/lexicon.h"
#include "textcorr/normalizer.h"
#include "textcorr/pipeline.h"
#include "textcorr/pos_tagger.h"

namespace textcorr::cli {
namespace {

namespace fs = std::filesystem;

// Failure to load a configured resource is a configuration problem, not an
// I/O one: the run cannot start.
template <typename F>
auto load_resource(std::string_view what, F&& load) {
  try {
    return load();
  } catch (const IoError& e) {
    throw ConfigError("cannot load " + std::string(what) + ": " + e.what());
  } catch (const ParseError& e) {
    throw ConfigError("bad " + std::string(what) + ": " + e.what());
  }
}

void write_or_print(const std::string& path, const std::string& text,
                    std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

NGramModel load_checked_model(const std::string& path, int order, NGramUnit unit,
                              std::string_view what) {
  NGramModel model = load_resource(what, [&] { return load_model(path); });
  if (model.order() != order || model.unit() != unit) {
    throw ConfigError(std::string(what) + " " + path + " is not an order-" +
                      std::to_string(order) + " " +
                      std::string(unit_name(unit)) + " model");
  }
  return model;
}

// build-lexicon ------------------------------------------------------------

struct BuildLexiconArgs {
  std::string input;
  std::string out_dir;
  std::string label = "general";
  bool annotated = false;
};

int build_lexicon_cmd(const BuildLexiconArgs& a, std::ostream& out) {
  const std::string text = read_text_file(a.input);
  fs::create_directories(a.out_dir);
  if (!a.annotated) {
    const auto label = parse_label(a.label);
    if (!label) throw ConfigError("unknown lexicon label '" + a.label + "'");
    std::vector<std::string> words;
    for (const auto& line : token_lines(normalize(text))) {
      words.insert(words.end(), line.begin(), line.end());
    }
    const Lexicon lex = build_lexicon(words, *label);
    save_lexicon(lex, fs::path(a.out_dir) / lexicon_file_name(*label));
    out << lexicon_file_name(*label) << '\t' << lex.words().size() << '\n';
    return kOk;
  }
  std::map<LexiconLabel, std::vector<std::string>> lists;
  for (LexiconLabel l : kAllLexiconLabels) lists[l];
  for (const TaggedSentence& s : parse_annotated_corpus(text)) {
    for (const auto& [word, tag] : s) {
      lists[LexiconLabel::kGeneral].push_back(word);
      const LexiconLabel l = lexicon_label_for(tag);
      if (l != LexiconLabel::kGeneral) lists[l].push_back(word);
    }
  }
  for (const auto& [label, words] : lists) {
    const Lexicon lex = build_lexicon(words, label);
    save_lexicon(lex, fs::path(a.out_dir) / lexicon_file_name(label));
    out << lexicon_file_name(label) << '\t' << lex.words().size() << '\n';
  }
  return kOk;
}

// build-lm -----------------------------------------------------------------

struct BuildLmArgs {
  std::string input;
  std::string out;
  int order = 2;
  std::string unit = "word";
  bool line_start = false;
};

int build_lm_cmd(const BuildLmArgs& a, std::ostream& out) {
  const NGramUnit unit = a.unit == "tag" ? NGramUnit::kTag : NGramUnit::kWord;
  NGramModel model(a.order, unit);  // rejects unsupported orders up front
  const std::string text = read_text_file(a.input);
  std::vector<std::vector<std::string>> lines;
  if (unit == NGramUnit::kWord) {
    lines = token_lines(normalize(text));
  } else {
    for (const TaggedSentence& s : parse_annotated_corpus(text)) {
      auto& tags = lines.emplace_back();
      for (const auto& [word, tag] : s) tags.emplace_back(tag_name(tag));
    }
  }
  for (auto& line : lines) {
    if (line.empty()) continue;
    if (a.line_start) line.insert(line.begin(), std::string(kLineStart));
    model.add_line(line);
  }
  write_or_print(a.out, format_model(model), out);
  return kOk;
}

// train-tagger -------------------------------------------------------------

struct TrainTaggerArgs {
  std::string input;
  std::string out;
  std::size_t max_rules = 100;
  std::size_t min_gain = 1;
};

int train_tagger_cmd(const TrainTaggerArgs& a, std::ostream& out) {
  const auto corpus = parse_annotated_corpus(read_text_file(a.input));
  if (corpus.empty()) throw ConfigError("annotated corpus is empty");
  TaggerModel model = train_initial(corpus);
  const RuleLearningResult learned =
      learn_rules(corpus, model, a.max_rules, a.min_gain);
  model.rules = learned.rules;
  out << "initial\terrors=" << learned.errors.front() << '\n';
  for (std::size_t k = 0; k < learned.rules.size(); ++k) {
    out << "rule " << k + 1 << '\t' << to_string(learned.rules[k])
        << "\terrors=" << learned.errors[k + 1] << '\n';
  }
  save_tagger_model(model, a.out);
  return kOk;
}

// inject -------------------------------------------------------------------

struct InjectArgs {
  std::string input;
  std::string out;
  std::string log;
  std::string gold;
  std::uint64_t seed = 0;
  bool extended = false;
};

int inject_cmd(const InjectArgs& a, std::ostream& out) {
  const std::string formatted = format_ten_per_line(read_text_file(a.input));
  const InjectionResult r =
      a.extended ? inject(formatted, a.seed, kAllOps) : inject(formatted, a.seed);
  if (!a.gold.empty()) write_text_file(a.gold, formatted);
  if (!a.log.empty()) write_text_file(a.log, format_injection_log(r.log));
  write_or_print(a.out, r.text, out);
  return kOk;
}

// correct ------------------------------------------------------------------

struct CorrectArgs {
  std::string input;
  std::string out;
  std::string mode = "maec";
  std::string lexicon_dir;
  std::string lm_bigram;
  std::string lm_trigram;
  std::string tagger;
  std::string tag_lm_bigram;
  std::string abbrev;
  bool use_tag_lm = false;
  std::optional<std::size_t> max_ed;
  std::string dump_detections;
  std::string dump_corrections;
};

int correct_cmd(const CorrectArgs& a, std::ostream& out) {
  PipelineOptions options;
  options.mode = a.mode == "paec" ? Mode::kPaec : Mode::kMaec;
  options.max_ed = a.max_ed;
  options.use_tag_lm = a.use_tag_lm;
  const bool pos_mode = options.mode == Mode::kPaec;
  if (pos_mode && a.tagger.empty()) {
    throw ConfigError("--mode paec needs --tagger");
  }
  if (a.use_tag_lm && (!pos_mode || a.tag_lm_bigram.empty())) {
    throw ConfigError("--use-tag-lm needs --mode paec and --tag-lm-bigram");
  }

  PipelineResources res;
  res.lexicons = load_resource("lexicons", [&] {
    return load_lexicon_dir(a.lexicon_dir, pos_mode);
  });
  res.word_bigrams =
      load_checked_model(a.lm_bigram, 2, NGramUnit::kWord, "word bigram model");
  if (!a.lm_trigram.empty()) {
    res.word_trigrams = load_checked_model(a.lm_trigram, 3, NGramUnit::kWord,
                                           "word trigram model");
  }
  if (!a.tag_lm_bigram.empty()) {
    res.tag_bigrams = load_checked_model(a.tag_lm_bigram, 2, NGramUnit::kTag,
                                         "tag bigram model");
  }
  if (pos_mode) {
    res.tagger = load_resource("tagger model",
                               [&] { return load_tagger_model(a.tagger); });
  }
  if (!a.abbrev.empty()) {
    res.abbreviations = load_resource("abbreviation table", [&] {
      return load_abbreviation_table(a.abbrev);
    });
  }

  const PipelineResult r = run_pipeline(read_text_file(a.input), res, options);
  write_or_print(a.out, r.text, out);
  if (!a.dump_detections.empty()) {
    write_text_file(a.dump_detections, format_detections(r.detections));
  }
  if (!a.dump_corrections.empty()) {
    write_text_file(a.dump_corrections, format_corrections(r.corrections));
  }
  return kOk;
}

// evaluate -----------------------------------------------------------------

struct EvaluateArgs {
  std::string gold;
  std::string corrupted;
  std::string corrected;
  std::string detections;
  std::string out;
  bool json = false;
};

int evaluate_cmd(const EvaluateArgs& a, std::ostream& out) {
  auto tokens = [](const std::string& path) {
    return token_lines(normalize(read_text_file(path)));
  };
  const EvalCounts counts =
      count_outcomes(tokens(a.gold), tokens(a.corrupted), tokens(a.corrected),
                     parse_detections(read_text_file(a.detections)));
  write_or_print(a.out, a.json ? format_report_json(counts) : format_report(counts),
                 out);
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Dictionary and n-gram based text error correction", "textcorr"};
  app.require_subcommand(1);
  std::function<int()> action;

  BuildLexiconArgs bl;
  auto* c_bl = app.add_subcommand("build-lexicon", "Build lexicon files");
  c_bl->add_option("input", bl.input, "Word list, text, or annotated corpus")
      ->required();
  c_bl->add_option("--out-dir", bl.out_dir, "Directory for lex.<label>.txt")
      ->required();
  c_bl->add_option("--label", bl.label, "Lexicon label for a plain word list");
  c_bl->add_flag("--annotated", bl.annotated,
                 "Input is word/TAG text; write every lexicon");
  c_bl->callback([&] { action = [&] { return build_lexicon_cmd(bl, out); }; });

  BuildLmArgs lm;
  auto* c_lm = app.add_subcommand("build-lm", "Count word or tag n-grams");
  c_lm->add_option("input", lm.input, "Text (word) or annotated corpus (tag)")
      ->required();
  c_lm->add_option("--out,-o", lm.out, "Model file (default stdout)");
  c_lm->add_option("--order", lm.order, "2 or 3");
  c_lm->add_option("--unit", lm.unit)->check(CLI::IsMember({"word", "tag"}));
  c_lm->add_flag("--line-start", lm.line_start,
                 "Prefix every line with the <I> pseudo-word");
  c_lm->callback([&] { action = [&] { return build_lm_cmd(lm, out); }; });

  TrainTaggerArgs tt;
  auto* c_tt = app.add_subcommand("train-tagger", "Learn transformation rules");
  c_tt->add_option("input", tt.input, "Annotated corpus")->required();
  c_tt->add_option("--out,-o", tt.out, "Tagger model file")->required();
  c_tt->add_option("--max-rules", tt.max_rules);
  c_tt->add_option("--min-gain", tt.min_gain)->check(CLI::PositiveNumber);
  c_tt->callback([&] { action = [&] { return train_tagger_cmd(tt, out); }; });

  InjectArgs in;
  auto* c_in = app.add_subcommand("inject", "Insert one random error per line");
  c_in->add_option("input", in.input, "Clean text")->required();
  c_in->add_option("output,--out,-o", in.out, "Corrupted text (default stdout)");
  c_in->add_option("--seed", in.seed);
  c_in->add_option("--log", in.log, "Injection log (TSV)");
  c_in->add_option("--gold", in.gold, "Write the 10-words-per-line clean text");
  c_in->add_flag("--extended", in.extended, "Draw from all seven edit types");
  c_in->callback([&] { action = [&] { return inject_cmd(in, out); }; });

  CorrectArgs co;
  auto* c_co = app.add_subcommand("correct", "Detect and correct errors");
  c_co->add_option("input", co.input, "Text to correct")->required();
  c_co->add_option("output,--out,-o", co.out, "Corrected text (default stdout)");
  c_co->add_option("--mode", co.mode)->check(CLI::IsMember({"paec", "maec"}));
  c_co->add_option("--lexicon-dir", co.lexicon_dir)->required();
  c_co->add_option("--lm-bigram", co.lm_bigram)->required();
  c_co->add_option("--lm-trigram", co.lm_trigram);
  c_co->add_option("--tagger", co.tagger);
  c_co->add_option("--tag-lm-bigram", co.tag_lm_bigram);
  c_co->add_flag("--use-tag-lm", co.use_tag_lm,
                 "Unseen tag bigrams also count as unseen word pairs");
  c_co->add_option("--abbrev", co.abbrev, "Abbreviation table");
  c_co->add_option("--max-ed", co.max_ed, "Candidate edit-distance limit");
  c_co->add_option("--dump-detections", co.dump_detections);
  c_co->add_option("--dump-corrections", co.dump_corrections);
  c_co->callback([&] { action = [&] { return correct_cmd(co, out); }; });

  EvaluateArgs ev;
  auto* c_ev = app.add_subcommand("evaluate", "Count correction outcomes");
  c_ev->add_option("--gold", ev.gold)->required();
  c_ev->add_option("--corrupted", ev.corrupted)->required();
  c_ev->add_option("--corrected", ev.corrected)->required();
  c_ev->add_option("--detections", ev.detections)->required();
  c_ev->add_option("--out,-o", ev.out, "Report file (default stdout)");
  c_ev->add_flag("--json", ev.json);
  c_ev->callback([&] { action = [&] { return evaluate_cmd(ev, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const AlignmentError& e) {
    err << "textcorr: alignment error: " << e.what() << '\n';
    return kAlignment;
  } catch (const IoError& e) {
    err << "textcorr: " << e.what() << '\n';
    return kIo;
  } catch (const fs::filesystem_error& e) {
    err << "textcorr: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "textcorr: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "textcorr: " << e.what() << '\n';
    return kUsage;
  }
}

int Main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace textcorr::cli
