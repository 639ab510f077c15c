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

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace oie {

// 1-based position of a token within its sentence. 0 denotes the virtual root.
using TokenIndex = std::int32_t;

// Universal POS categories.
enum class Upos : std::uint8_t {
  kNoun,
  kPropn,
  kPron,
  kVerb,
  kAux,
  kAdj,
  kAdv,
  kAdp,
  kDet,
  kPart,
  kNum,
  kCconj,
  kSconj,
  kPunct,
  kSym,
  kIntj,
  kX,
};

inline constexpr std::array<std::pair<Upos, std::string_view>, 17> kUposNames = {{
    {Upos::kNoun, "NOUN"},   {Upos::kPropn, "PROPN"}, {Upos::kPron, "PRON"},
    {Upos::kVerb, "VERB"},   {Upos::kAux, "AUX"},     {Upos::kAdj, "ADJ"},
    {Upos::kAdv, "ADV"},     {Upos::kAdp, "ADP"},     {Upos::kDet, "DET"},
    {Upos::kPart, "PART"},   {Upos::kNum, "NUM"},     {Upos::kCconj, "CCONJ"},
    {Upos::kSconj, "SCONJ"}, {Upos::kPunct, "PUNCT"}, {Upos::kSym, "SYM"},
    {Upos::kIntj, "INTJ"},   {Upos::kX, "X"},
}};

inline std::string_view to_string(Upos upos) {
  for (const auto& [value, name] : kUposNames) {
    if (value == upos) return name;
  }
  return "X";
}

inline std::optional<Upos> parse_upos(std::string_view name) {
  for (const auto& [value, text] : kUposNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

inline bool is_nominal(Upos upos) {
  return upos == Upos::kNoun || upos == Upos::kPropn || upos == Upos::kPron;
}

inline bool is_verbal(Upos upos) {
  return upos == Upos::kVerb || upos == Upos::kAux;
}

inline std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Maps Stanford-era basic dependency labels onto their Universal
// Dependencies v2 equivalents. Labels without an alias pass through
// lower-cased.
inline std::string normalize_deprel(std::string_view label) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 17>
      kAliases = {{
          {"nsubjpass", "nsubj:pass"},
          {"csubjpass", "csubj:pass"},
          {"dobj", "obj"},
          {"auxpass", "aux:pass"},
          {"prt", "compound:prt"},
          {"nn", "compound"},
          {"poss", "nmod:poss"},
          {"possessive", "case"},
          {"neg", "advmod"},
          {"num", "nummod"},
          {"tmod", "obl:tmod"},
          {"npadvmod", "obl:npmod"},
          {"rcmod", "acl:relcl"},
          {"partmod", "acl"},
          {"infmod", "acl"},
          {"vmod", "acl"},
          {"acomp", "xcomp"},
      }};
  std::string lowered = to_lower(label);
  for (const auto& [from, to] : kAliases) {
    if (lowered == from) return std::string(to);
  }
  return lowered;
}

// Universal label without its language-specific subtype ("nsubj:pass" -> "nsubj").
inline std::string_view base_label(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

struct Token {
  TokenIndex index = 0;
  std::string surface;
  std::string lemma;
  Upos upos = Upos::kX;
  TokenIndex head = 0;
  std::string deprel;

  friend bool operator==(const Token&, const Token&) = default;
};

}  // namespace oie
