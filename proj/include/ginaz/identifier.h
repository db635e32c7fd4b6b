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
// Word-level gender identification: a label lexicon gathered from the corpus
// backed by an averaged-perceptron classifier over character and context
// features.
//
// Serialized layout (all integers and floats little-endian):
//
//   char[4]  magic "GZID"
//   u32      layout version (1)
//   u32      class count C
//   C x      { u32 byte length, UTF-8 label code }
//   u64      lexicon entry count
//   each     { u32 length, surface bytes, u32 k, k x { u32 class, u32 count } }
//   u64      feature count
//   each     { u32 length, feature bytes, C x f64 weight }

#ifndef GINAZ_IDENTIFIER_H_
#define GINAZ_IDENTIFIER_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ginaz/corpus.h"
#include "ginaz/text.h"

namespace ginaz {

inline constexpr std::size_t kLabelClassCount = 9;

struct IdentifierOptions {
  int epochs = 10;
  std::uint32_t seed = 20221118;
};

class IdentifierModel {
 public:
  using Weights = std::array<double, kLabelClassCount>;
  // Class index (into AllLabels()) -> count.
  using LabelCounts = std::map<int, std::uint32_t>;

  const std::map<std::string, LabelCounts, std::less<>>& label_lexicon() const {
    return lexicon_;
  }
  const std::unordered_map<std::string, Weights>& weights() const {
    return weights_;
  }

  // Classifier scores for token `index` of `tokens`.
  Weights Score(const std::vector<std::string>& tokens, std::size_t index) const;

  void Save(std::ostream& out) const;
  static IdentifierModel Load(std::istream& in);

  bool operator==(const IdentifierModel&) const = default;

 private:
  friend IdentifierModel TrainIdentifier(const std::vector<CorpusTuple>&,
                                         const IdentifierOptions&);

  std::map<std::string, LabelCounts, std::less<>> lexicon_;
  std::unordered_map<std::string, Weights> weights_;
};

// Feature strings for one token position.
std::vector<std::string> TokenFeatures(const std::vector<std::string>& tokens,
                                       std::size_t index);

// Trains on every variant sentence of every tuple, with labels derived from
// the base labels and the variant key. Throws ModelError on an empty corpus.
IdentifierModel TrainIdentifier(const std::vector<CorpusTuple>& tuples,
                                const IdentifierOptions& options = {});

// One label per token. Words seen with a single label keep it; other words
// containing a letter go to the classifier (restricted to the labels seen for
// that word, if any); words without letters are N.
std::vector<TokenLabel> Identify(const Sentence& sentence,
                                 const IdentifierModel& model);

}  // namespace ginaz

#endif  // GINAZ_IDENTIFIER_H_
