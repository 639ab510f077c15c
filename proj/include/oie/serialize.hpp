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

#pragma once

#include <charconv>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oie/extraction_record.hpp"

namespace oie {

enum class OutputFormat { kJsonl, kTsv };

inline nlohmann::ordered_json to_json(const ExtractionRecord& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["sentence_id"] = r.sentence_id;
  j["extractor"] = to_string(r.extractor);
  j["arg1"] = r.arg1.rendered;
  j["rel"] = r.rel.text();
  j["arg2"] = r.arg2 ? ordered_json(r.arg2->rendered) : ordered_json(nullptr);
  j["extra_args"] = r.extra_arg_texts();
  j["clause_type"] =
      r.clause_type ? ordered_json(to_string(*r.clause_type)) : ordered_json(nullptr);
  if (r.attributed_to) {
    j["attributed_to"] = {{"subject", r.attributed_to->subject},
                          {"verb", r.attributed_to->verb}};
  } else {
    j["attributed_to"] = nullptr;
  }
  if (r.clausal_modifier) {
    j["clausal_modifier"] = {{"marker", r.clausal_modifier->marker},
                             {"clause", r.clausal_modifier->clause}};
  } else {
    j["clausal_modifier"] = nullptr;
  }
  j["confidence"] = r.confidence;
  ordered_json spans;
  spans["arg1"] = r.arg1.token_indices;
  spans["rel"] = r.rel.token_indices();
  spans["arg2"] = r.arg2 ? ordered_json(r.arg2->token_indices) : ordered_json(nullptr);
  spans["extra_args"] = ordered_json::array();
  for (const Argument& a : r.extra_args) spans["extra_args"].push_back(a.span.token_indices);
  j["spans"] = std::move(spans);
  return j;
}

namespace detail {

inline std::string tsv_field(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

inline std::string format_confidence(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string out(buf, end);
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

}  // namespace detail

// Columns: sentence_id, extractor, arg1, rel, arg2, extra_args, clause_type,
// attributed_to, clausal_modifier, confidence. Annotations render the way
// they are usually displayed: "believe; Early astronomers", "if; he wins".
inline std::string to_tsv(const ExtractionRecord& r) {
  std::string extras;
  for (const Argument& a : r.extra_args) {
    if (!extras.empty()) extras += ';';
    extras += a.text();
  }
  std::string attribution;
  if (r.attributed_to) attribution = r.attributed_to->verb + "; " + r.attributed_to->subject;
  std::string modifier;
  if (r.clausal_modifier) {
    modifier = r.clausal_modifier->marker + "; " + r.clausal_modifier->clause;
  }
  const std::string columns[] = {
      r.sentence_id,
      std::string(to_string(r.extractor)),
      r.arg1.rendered,
      r.rel.text(),
      r.arg2_text(),
      extras,
      r.clause_type ? std::string(to_string(*r.clause_type)) : std::string(),
      attribution,
      modifier,
      detail::format_confidence(r.confidence),
  };
  std::string line = detail::tsv_field(columns[0]);
  for (std::size_t i = 1; i < std::size(columns); ++i) {
    line += '\t';
    line += detail::tsv_field(columns[i]);
  }
  return line;
}

inline void write_record(std::ostream& out, const ExtractionRecord& r, OutputFormat format) {
  if (format == OutputFormat::kJsonl) {
    out << to_json(r).dump() << '\n';
  } else {
    out << to_tsv(r) << '\n';
  }
}

inline std::string serialize_records(std::span<const ExtractionRecord> records,
                                     OutputFormat format) {
  std::ostringstream out;
  for (const ExtractionRecord& r : records) write_record(out, r, format);
  return out.str();
}

}  // namespace oie
