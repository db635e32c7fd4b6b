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
// Parallel gender corpus: block TSV reader and the changed-word-pair walk
// that the lexicon and suffix-rule induction are built from.
//
// File layout, one block per tuple, blocks separated by blank lines:
//
//   #id<TAB>tuple-id
//   B<TAB>base tokens, space separated
//   L<TAB>one label per base token (N 1M 1F 2M 2F 1M+2M 1M+2F 1F+2M 1F+2F)
//   MM<TAB>variant for speaker M, listener M
//   MF<TAB>...
//   FM<TAB>...
//   FF<TAB>...

#ifndef GINAZ_CORPUS_H_
#define GINAZ_CORPUS_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ginaz/text.h"

namespace ginaz {

inline constexpr std::string_view kSentenceBoundary = "<s>";

struct VariantKey {
  Gender speaker;
  Gender listener;

  Gender GenderFor(Person p) const {
    return p == Person::kFirst ? speaker : listener;
  }
  // "MM", "MF", "FM" or "FF".
  std::string Code() const;
  auto operator<=>(const VariantKey&) const = default;
};

// MM, MF, FM, FF.
const std::vector<VariantKey>& AllVariantKeys();

struct CorpusTuple {
  std::string id;
  Sentence base;
  std::vector<TokenLabel> labels;
  std::map<VariantKey, Sentence> variants;
  std::size_t line = 0;  // line of the #id header
};

// Throws ParseError naming the offending line.
std::vector<CorpusTuple> ParseCorpus(std::string_view text,
                                     const std::string& source_name);
std::vector<CorpusTuple> ParseCorpusFile(const std::string& path);

// One observed rewrite of a single word for a single person.
struct ChangedPair {
  std::string_view prev;     // previous token in the source variant, or <s>
  std::string_view source;
  std::string_view target;
  GenderMark mark;           // person that changed and its new gender
};

// Visits every token that differs between two variants of a tuple whose keys
// differ in exactly one person. Each such ordered variant pair contributes one
// ChangedPair per differing token position.
void ForEachChangedPair(const CorpusTuple& tuple,
                        const std::function<void(const ChangedPair&)>& visit);

// Label of token `index` as it appears in `key`'s variant: the base marks with
// their genders replaced by the key's genders.
TokenLabel VariantLabel(const TokenLabel& base_label, VariantKey key);

}  // namespace ginaz

#endif  // GINAZ_CORPUS_H_
