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

// Runs every extractor over one hand-parsed sentence and prints the records.

#include <iostream>

#include "oie/oie.hpp"

int main() {
  constexpr const char* kParse =
      "# sent_id = demo\n"
      "# text = Early astronomers believed that the earth is the center of the universe.\n"
      "1\tEarly\tearly\tADJ\t_\t_\t2\tamod\t_\t_\n"
      "2\tastronomers\tastronomer\tNOUN\t_\t_\t3\tnsubj\t_\t_\n"
      "3\tbelieved\tbelieve\tVERB\t_\t_\t0\troot\t_\t_\n"
      "4\tthat\tthat\tSCONJ\t_\t_\t9\tmark\t_\t_\n"
      "5\tthe\tthe\tDET\t_\t_\t6\tdet\t_\t_\n"
      "6\tearth\tearth\tNOUN\t_\t_\t9\tnsubj\t_\t_\n"
      "7\tis\tbe\tAUX\t_\t_\t9\tcop\t_\t_\n"
      "8\tthe\tthe\tDET\t_\t_\t9\tdet\t_\t_\n"
      "9\tcenter\tcenter\tNOUN\t_\t_\t3\tccomp\t_\t_\n"
      "10\tof\tof\tADP\t_\t_\t12\tcase\t_\t_\n"
      "11\tthe\tthe\tDET\t_\t_\t12\tdet\t_\t_\n"
      "12\tuniverse\tuniverse\tNOUN\t_\t_\t9\tnmod\t_\t_\n"
      "13\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_\n\n";

  const oie::Corpus corpus = oie::parse_conllu(std::string_view(kParse), "demo");
  const auto records = oie::extract_corpus(corpus, oie::ExtractOptions{});
  std::cout << oie::serialize_records(records, oie::OutputFormat::kTsv);
  return 0;
}
