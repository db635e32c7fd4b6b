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

#include "ginaz/lexicon.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ginaz/errors.h"
#include "tsv.h"

namespace ginaz {

void GenderLexicon::Add(std::string_view prev, std::string_view surface,
                        GenderMark target, std::string_view alternative,
                        std::uint32_t count) {
  unigram_[{std::string(surface), target.person, target.gender}]
          [std::string(alternative)] += count;
  bigram_[{std::string(prev), std::string(surface), target.person,
           target.gender}][std::string(alternative)] += count;
}

RankedAlternatives GenderLexicon::Rank(const Counts& counts) {
  RankedAlternatives out(counts.begin(), counts.end());
  // std::map iteration is already lexicographic; stable sort keeps that
  // order among equal counts.
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  return out;
}

RankedAlternatives GenderLexicon::Unigram(std::string_view surface,
                                          GenderMark target) const {
  auto it = unigram_.find({std::string(surface), target.person, target.gender});
  if (it == unigram_.end()) return {};
  return Rank(it->second);
}

RankedAlternatives GenderLexicon::Bigram(std::string_view prev,
                                         std::string_view surface,
                                         GenderMark target) const {
  auto it = bigram_.find(
      {std::string(prev), std::string(surface), target.person, target.gender});
  if (it == bigram_.end()) return {};
  return Rank(it->second);
}

void GenderLexicon::Save(std::ostream& out) const {
  for (const auto& [key, counts] : unigram_) {
    const auto& [surface, person, gender] = key;
    for (const auto& [alt, n] : counts) {
      out << "U\t" << surface << '\t' << PersonNumber(person) << '\t'
          << GenderCode(gender) << '\t' << alt << '\t' << n << '\n';
    }
  }
  for (const auto& [key, counts] : bigram_) {
    const auto& [prev, surface, person, gender] = key;
    for (const auto& [alt, n] : counts) {
      out << "B\t" << prev << '\t' << surface << '\t' << PersonNumber(person)
          << '\t' << GenderCode(gender) << '\t' << alt << '\t' << n << '\n';
    }
  }
}

GenderLexicon GenderLexicon::Load(std::istream& in) {
  GenderLexicon lex;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const auto f = tsv::Split(line);
    if (f[0] == "U" && f.size() == 6) {
      const GenderMark m{tsv::ParsePerson(f[2]), tsv::ParseGender(f[3])};
      lex.unigram_[{std::string(f[1]), m.person, m.gender}][std::string(f[4])] +=
          tsv::ParseCount(f[5]);
    } else if (f[0] == "B" && f.size() == 7) {
      const GenderMark m{tsv::ParsePerson(f[3]), tsv::ParseGender(f[4])};
      lex.bigram_[{std::string(f[1]), std::string(f[2]), m.person, m.gender}]
                 [std::string(f[5])] += tsv::ParseCount(f[6]);
    } else {
      throw tsv::FormatError("lexicon line " + std::to_string(number) +
                             ": malformed record");
    }
  }
  return lex;
}

GenderLexicon BuildLexicon(const std::vector<CorpusTuple>& tuples) {
  GenderLexicon lex;
  for (const CorpusTuple& t : tuples) {
    ForEachChangedPair(t, [&](const ChangedPair& p) {
      lex.Add(p.prev, p.source, p.mark, p.target);
    });
  }
  return lex;
}

}  // namespace ginaz
