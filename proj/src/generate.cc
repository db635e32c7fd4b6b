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

#include "ginaz/generate.h"

#include <algorithm>

namespace ginaz {

const char* ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kCorpus:
      return "corpus";
    case Provenance::kMorph:
      return "morph";
    case Provenance::kTransducer:
      return "transducer";
    case Provenance::kIdentity:
      return "identity";
  }
  return "unknown";
}

RankedAlternatives CorpusRewrite(std::string_view prev, std::string_view token,
                                 GenderMark target,
                                 const GenderLexicon& lexicon) {
  RankedAlternatives out = lexicon.Bigram(prev, token, target);
  if (out.empty()) out = lexicon.Unigram(token, target);
  return out;
}

namespace {

AlternativeSet Identity(const Token& token, GenderMark target,
                        bool unrewritten) {
  return {token, target, {{token.surface, Provenance::kIdentity, 0.0}},
          unrewritten};
}

}  // namespace

AlternativeSet GenerateAlternatives(std::string_view prev, const Token& token,
                                    const TokenLabel& label, GenderMark target,
                                    const GeneratorModels& models) {
  const auto current = label.MarkFor(target.person);
  if (!current || *current == target.gender) {
    return Identity(token, target, false);
  }
  AlternativeSet set{token, target, {}, false};
  auto add = [&](std::string surface, Provenance p, double hint) {
    if (set.alternatives.size() >= kStageCandidateCap) return;
    for (const auto& a : set.alternatives) {
      if (a.surface == surface) return;
    }
    set.alternatives.push_back({std::move(surface), p, hint});
  };

  for (auto& [alt, count] :
       CorpusRewrite(prev, token.surface, target, models.lexicon)) {
    add(alt, Provenance::kCorpus, count);
  }
  if (!set.alternatives.empty()) return set;

  for (auto& alt : MorphRewrite(token.surface, target, models.rules)) {
    add(std::move(alt), Provenance::kMorph, 0.0);
  }
  if (!set.alternatives.empty()) return set;

  for (auto& alt : Transduce(token.surface, target, models.transducer)) {
    add(std::move(alt), Provenance::kTransducer, 0.0);
  }
  if (!set.alternatives.empty()) return set;

  return Identity(token, target, true);
}

}  // namespace ginaz
