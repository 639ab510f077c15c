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

#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oie/token.hpp"

namespace oie {

// Lower-cased words or lemmas.
using WordSet = std::set<std::string, std::less<>>;

inline bool contains_word(const WordSet& words, std::string_view word) {
  return words.contains(to_lower(word));
}

// Newline-delimited word list. Blank lines and '#' comments are ignored;
// entries are trimmed and lower-cased.
inline WordSet read_word_list(std::istream& in) {
  WordSet words;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    words.insert(to_lower(std::string_view(line).substr(first, last - first + 1)));
  }
  return words;
}

inline std::ifstream open_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

inline WordSet read_word_list(const std::filesystem::path& path) {
  auto in = open_config(path);
  return read_word_list(in);
}

}  // namespace oie
