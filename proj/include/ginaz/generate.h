// Copyright 2026 The Ginaz Authors.
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
//
// Out-of-context word gender rewriting. Three generators are tried in order
// and the first one that produces anything wins:
//
//   1. corpus lookup (previous word + word, backing off to the word alone)
//   2. hand-written morphological rules
//   3. suffix rules induced from the corpus
//
// If none fires, the word is returned unchanged and flagged as unrewritten.

#ifndef GINAZ_GENERATE_H_
#define GINAZ_GENERATE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ginaz/bundle.h"
#include "ginaz/char_transducer.h"
#include "ginaz/lexicon.h"
#include "ginaz/rule_table.h"
#include "ginaz/text.h"

namespace ginaz {

inline constexpr std::size_t kStageCandidateCap = 5;

enum class Provenance { kCorpus, kMorph, kTransducer, kIdentity };

const char* ProvenanceName(Provenance p);

struct Alternative {
  std::string surface;
  Provenance provenance;
  double hint = 0.0;  // lexicon count or rule weight; never used for ranking

  bool operator==(const Alternative&) const = default;
};

struct AlternativeSet {
  Token source;
  GenderMark target;
  std::vector<Alternative> alternatives;
  bool unrewritten = false;
};

// Non-owning view of the three generator models.
struct GeneratorModels {
  const GenderLexicon& lexicon;
  const RuleTable& rules;
  const CharTransducer& transducer;

  static GeneratorModels Of(const ModelBundle& bundle) {
    return {bundle.lexicon, bundle.rules, bundle.transducer};
  }
};

// Corpus alternatives for `token`, most frequent first (ties lexicographic).
// The bigram key wins when present; otherwise the unigram key is used.
RankedAlternatives CorpusRewrite(std::string_view prev, std::string_view token,
                                 GenderMark target,
                                 const GenderLexicon& lexicon);

// Runs the cascade for one target mark. Returns a singleton identity set when
// the label carries no mark for target.person or already matches it.
AlternativeSet GenerateAlternatives(std::string_view prev, const Token& token,
                                    const TokenLabel& label, GenderMark target,
                                    const GeneratorModels& models);

}  // namespace ginaz

#endif  // GINAZ_GENERATE_H_
