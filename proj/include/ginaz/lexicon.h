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

#ifndef GINAZ_LEXICON_H_
#define GINAZ_LEXICON_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ginaz/corpus.h"
#include "ginaz/text.h"

namespace ginaz {

// (alternative surface, count), most frequent first, ties lexicographic.
using RankedAlternatives = std::vector<std::pair<std::string, std::uint32_t>>;

// Corpus-observed word alternatives keyed by (word, person, target gender),
// plus the same keyed by the previous word.
class GenderLexicon {
 public:
  void Add(std::string_view prev, std::string_view surface, GenderMark target,
           std::string_view alternative, std::uint32_t count = 1);

  RankedAlternatives Unigram(std::string_view surface, GenderMark target) const;
  RankedAlternatives Bigram(std::string_view prev, std::string_view surface,
                            GenderMark target) const;

  std::size_t unigram_keys() const { return unigram_.size(); }
  std::size_t bigram_keys() const { return bigram_.size(); }

  // Line format:
  //   U<TAB>surface<TAB>person<TAB>gender<TAB>alternative<TAB>count
  //   B<TAB>prev<TAB>surface<TAB>person<TAB>gender<TAB>alternative<TAB>count
  void Save(std::ostream& out) const;
  static GenderLexicon Load(std::istream& in);

  bool operator==(const GenderLexicon&) const = default;

 private:
  using Counts = std::map<std::string, std::uint32_t, std::less<>>;
  using UnigramKey = std::tuple<std::string, Person, Gender>;
  using BigramKey = std::tuple<std::string, std::string, Person, Gender>;

  static RankedAlternatives Rank(const Counts& counts);

  std::map<UnigramKey, Counts> unigram_;
  std::map<BigramKey, Counts> bigram_;
};

GenderLexicon BuildLexicon(const std::vector<CorpusTuple>& tuples);

}  // namespace ginaz

#endif  // GINAZ_LEXICON_H_
