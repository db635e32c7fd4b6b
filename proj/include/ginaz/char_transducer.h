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

#ifndef GINAZ_CHAR_TRANSDUCER_H_
#define GINAZ_CHAR_TRANSDUCER_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ginaz/corpus.h"
#include "ginaz/text.h"

namespace ginaz {

// Weighted suffix rewrite conditioned on the (person, target gender) key.
struct SuffixRule {
  std::string strip;
  std::string add;
  Person person;
  Gender gender;
  std::uint32_t weight = 1;

  bool operator==(const SuffixRule&) const = default;
};

// Suffix rules induced from the corpus word pairs. Rules are kept sorted by
// (longer strip first, higher weight first, then strip/add bytes).
class CharTransducer {
 public:
  static constexpr std::size_t kDefaultMaxSuffixLen = 4;
  static constexpr std::size_t kCandidateCap = 5;

  CharTransducer() = default;
  CharTransducer(std::vector<SuffixRule> rules, std::size_t max_suffix_len,
                 std::size_t dropped_pairs);

  const std::vector<SuffixRule>& rules() const { return rules_; }
  std::size_t max_suffix_len() const { return max_suffix_len_; }
  // Changed pairs whose strip and add both exceeded max_suffix_len.
  std::size_t dropped_pairs() const { return dropped_pairs_; }

  void Save(std::ostream& out) const;
  static CharTransducer Load(std::istream& in);

  bool operator==(const CharTransducer&) const = default;

 private:
  std::vector<SuffixRule> rules_;
  std::size_t max_suffix_len_ = kDefaultMaxSuffixLen;
  std::size_t dropped_pairs_ = 0;
};

// Strips the longest common prefix (in code points) of a changed pair.
SuffixRule AlignPair(std::string_view source, std::string_view target,
                     GenderMark mark);

CharTransducer InduceCharRules(
    const std::vector<CorpusTuple>& tuples,
    std::size_t max_suffix_len = CharTransducer::kDefaultMaxSuffixLen);

// Up to kCandidateCap distinct rewrites of `token` by the rules matching
// `target`, in rule order. A rule needs a non-empty stem left after stripping.
std::vector<std::string> Transduce(std::string_view token, GenderMark target,
                                   const CharTransducer& transducer);

}  // namespace ginaz

#endif  // GINAZ_CHAR_TRANSDUCER_H_
