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

#include "oie/clause.hpp"
#include "oie/conllu.hpp"
#include "oie/context.hpp"
#include "oie/eval.hpp"
#include "oie/extraction_record.hpp"
#include "oie/lexicon.hpp"
#include "oie/pipeline.hpp"
#include "oie/sentence_graph.hpp"
#include "oie/serialize.hpp"
#include "oie/token.hpp"
#include "oie/verb_phrase.hpp"
