// Copyright 2026 The OIE Authors.
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

// oie extract | eval | query
//
// Exit codes: 0 success, 1 usage error, 2 I/O or format error,
// 3 every input sentence failed validation.
//
// OIE_LOG controls diagnostics on stderr: quiet, warn (default), info.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oie/oie.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kAllRejected = 3 };

// Errors always print; OIE_LOG=quiet silences warnings.
enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2 };

LogLevel log_level() {
  const char* env = std::getenv("OIE_LOG");
  if (!env) return LogLevel::kWarn;
  const std::string value = oie::to_lower(env);
  if (value == "quiet" || value == "0" || value == "off") return LogLevel::kError;
  if (value == "info" || value == "debug" || value == "2" || value == "3") return LogLevel::kInfo;
  return LogLevel::kWarn;
}

void log(LogLevel level, const std::string& message) {
  if (static_cast<int>(level) <= static_cast<int>(log_level())) {
    std::cerr << "oie: " << message << "\n";
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

struct ExtractArgs {
  std::string input = "-";
  std::string extractors = "verb,clause,noun";
  std::string format = "jsonl";
  std::string lexicon;
  std::string verb_lists;
  std::string attribution_verbs;
  std::string markers;
  std::string relational_nouns;
  unsigned workers = 0;
};

int run_extract(const ExtractArgs& args) {
  oie::ExtractOptions options;
  options.verb_phrase = options.clause = options.noun_rule = false;
  std::stringstream names(args.extractors);
  for (std::string name; std::getline(names, name, ',');) {
    if (name == "verb") {
      options.verb_phrase = true;
    } else if (name == "clause") {
      options.clause = true;
    } else if (name == "noun") {
      options.noun_rule = true;
    } else {
      throw UsageError("unknown extractor '" + name + "' (expected verb, clause, noun)");
    }
  }
  oie::OutputFormat format;
  if (args.format == "jsonl") {
    format = oie::OutputFormat::kJsonl;
  } else if (args.format == "tsv") {
    format = oie::OutputFormat::kTsv;
  } else {
    throw UsageError("unknown format '" + args.format + "' (expected jsonl or tsv)");
  }
  if (!args.lexicon.empty()) {
    auto in = open_input(args.lexicon);
    options.lexicon = oie::read_pattern_lexicon(in);
  }
  if (!args.verb_lists.empty()) {
    auto in = open_input(args.verb_lists);
    options.verb_lists = oie::read_verb_lists(in);
  }
  if (!args.attribution_verbs.empty()) {
    auto in = open_input(args.attribution_verbs);
    options.attribution_verbs = oie::read_word_list(in);
  }
  if (!args.markers.empty()) {
    auto in = open_input(args.markers);
    options.markers = oie::read_word_list(in);
  }
  if (!args.relational_nouns.empty()) {
    auto in = open_input(args.relational_nouns);
    options.relational_nouns = oie::read_word_list(in);
  }
  options.workers = args.workers;

  std::ifstream file;
  std::istream* in = &std::cin;
  if (args.input != "-") {
    file = open_input(args.input);
    in = &file;
  }

  std::size_t emitted = 0;
  const auto summary = oie::run_extract(
      *in, options,
      [&](const oie::ExtractionRecord& r) {
        oie::write_record(std::cout, r, format);
        ++emitted;
      },
      [](const oie::SentenceError& e) {
        log(LogLevel::kWarn, "skipping sentence " + e.sentence_id + " (line " +
                                 std::to_string(e.first_line) + "): " + e.message);
      });
  std::cout.flush();
  if (in->bad() || !std::cout) throw IoError("read or write failure");
  log(LogLevel::kInfo, std::to_string(summary.sentences) + " sentences, " +
                           std::to_string(summary.rejected) + " rejected, " +
                           std::to_string(emitted) + " records");
  if (summary.sentences > 0 && summary.rejected == summary.sentences) return kAllRejected;
  return kOk;
}

std::vector<oie::GoldRecord> load_jsonl(const std::string& path) {
  auto in = open_input(path);
  try {
    return oie::read_gold_jsonl(in);
  } catch (const std::runtime_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

int run_eval(const std::string& gold_path, const std::string& pred_path, double overlap) {
  if (!(overlap > 0.0 && overlap <= 1.0)) throw UsageError("--overlap must lie in (0, 1]");
  const auto gold = load_jsonl(gold_path);
  const auto predicted = load_jsonl(pred_path);
  const auto report = oie::score(std::span<const oie::GoldRecord>(gold),
                                 std::span<const oie::GoldRecord>(predicted), overlap);
  std::cout << oie::to_json(report).dump(2) << "\n";
  return kOk;
}

// A record read back from JSONL, echoed verbatim when it matches.
struct RecordLine {
  oie::GoldRecord record;
  std::string raw;
};

oie::GoldRecord as_text(const RecordLine& line) { return line.record; }

int run_query(const std::string& records_path, const oie::QueryTemplate& pattern) {
  if (pattern.all_wildcards()) throw UsageError("query needs at least one concrete slot");
  auto in = open_input(records_path);
  std::vector<RecordLine> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      lines.push_back({oie::gold_record_from_json(nlohmann::json::parse(line)), line});
    } catch (const std::exception& e) {
      throw IoError(records_path + ": line " + std::to_string(number) + ": " + e.what());
    }
  }
  for (const RecordLine& hit : oie::query(lines, pattern)) std::cout << hit.raw << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based open information extraction over CoNLL-U parses"};
  app.require_subcommand(1);

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Extract relation tuples from CoNLL-U");
  extract_cmd->add_option("--input", extract.input, "CoNLL-U file, or - for stdin");
  extract_cmd->add_option("--extractor", extract.extractors,
                          "Comma-separated subset of verb,clause,noun");
  extract_cmd->add_option("--format", extract.format, "jsonl or tsv");
  extract_cmd->add_option("--lexicon", extract.lexicon, "Relation lexicon (one per line)");
  extract_cmd->add_option("--verb-lists", extract.verb_lists, "Clause-typing verb lists");
  extract_cmd->add_option("--attribution-verbs", extract.attribution_verbs,
                          "Attribution verb lemmas (one per line)");
  extract_cmd->add_option("--markers", extract.markers, "Clausal modifier markers");
  extract_cmd->add_option("--relational-nouns", extract.relational_nouns,
                          "Relational nouns for noun-mediated rules");
  extract_cmd->add_option("--workers", extract.workers, "Worker threads (0 = all cores)");

  std::string gold_path;
  std::string pred_path;
  double overlap = 0.75;
  auto* eval_cmd = app.add_subcommand("eval", "Score predicted records against gold tuples");
  eval_cmd->add_option("--gold", gold_path, "Gold JSONL")->required();
  eval_cmd->add_option("--pred", pred_path, "Predicted JSONL")->required();
  eval_cmd->add_option("--overlap", overlap, "Token-overlap threshold in (0, 1]");

  std::string records_path;
  oie::QueryTemplate pattern;
  auto* query_cmd = app.add_subcommand("query", "Wildcard template query over records");
  query_cmd->add_option("--records", records_path, "Records JSONL")->required();
  query_cmd->add_option("--arg1", pattern.arg1, "Argument 1 or ?");
  query_cmd->add_option("--rel", pattern.rel, "Relation or ?");
  query_cmd->add_option("--arg2", pattern.arg2, "Argument 2 or ?");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*extract_cmd) return run_extract(extract);
    if (*eval_cmd) return run_eval(gold_path, pred_path, overlap);
    if (*query_cmd) return run_query(records_path, pattern);
  } catch (const UsageError& e) {
    log(LogLevel::kError, e.what());
    return kUsage;
  } catch (const std::exception& e) {
    log(LogLevel::kError, e.what());
    return kIo;
  }
  return kUsage;
}
