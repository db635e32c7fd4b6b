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

#ifndef GINAZ_LANGUAGE_MODEL_H_
#define GINAZ_LANGUAGE_MODEL_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ginaz/corpus.h"

namespace ginaz {

// Word-trigram model scored with stupid backoff:
//
//   S(w | u v) = c(u v w) / h(u v)        if c(u v w) > 0
//              = alpha * S(w | v)         otherwise
//   S(w | v)   = c(v w) / h(v)            if c(v w) > 0
//              = alpha * S(w)             otherwise
//   S(w)       = c(w) / N                 if c(w) > 0
//              = 1 / (N * (V + 1))        for unseen words
//
// where h(.) is the total count of n-grams extending that history, N the
// number of unigram tokens (including </s>) and V the vocabulary size.
// Sentences are padded as <s> <s> w1 ... wn </s>. Scores are natural logs.
class NGramLM {
 public:
  using WordId = std::uint32_t;
  static constexpr WordId kBos = 0;
  static constexpr WordId kEos = 1;
  static constexpr WordId kUnknown = UINT32_MAX;
  static constexpr double kDefaultAlpha = 0.4;

  // Throws ModelError if `sentences` is empty.
  static NGramLM FromSentences(
      const std::vector<std::vector<std::string>>& sentences,
      double alpha = kDefaultAlpha);

  WordId Id(std::string_view word) const;

  // log S(w | u v) for already-interned ids.
  double LogProb(WordId u, WordId v, WordId w) const;
  double LogProb(std::string_view u, std::string_view v,
                 std::string_view w) const;

  // Sum of LogProb over every token and the closing </s>. Throws
  // PreconditionError on an empty token list.
  double Score(std::span<const std::string> tokens) const;

  double alpha() const { return alpha_; }
  std::size_t vocab_size() const { return vocab_.size() - 1; }  // minus <s>
  std::uint64_t token_count() const { return total_; }

  // Counts only; histories and totals are recomputed on load.
  void Save(std::ostream& out) const;
  static NGramLM Load(std::istream& in);

  // Equal when both would serialize identically; word ids may differ.
  bool operator==(const NGramLM& other) const;

 private:
  NGramLM() = default;

  WordId Intern(std::string_view word);
  void AddSentence(const std::vector<WordId>& ids);
  void Finalize();

  static std::uint64_t Pack(WordId a, WordId b) {
    return (static_cast<std::uint64_t>(a) << 21) | b;
  }
  static std::uint64_t Pack(WordId a, WordId b, WordId c) {
    return (static_cast<std::uint64_t>(a) << 42) |
           (static_cast<std::uint64_t>(b) << 21) | c;
  }

  double alpha_ = kDefaultAlpha;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, WordId> ids_;
  std::vector<std::uint64_t> unigrams_;
  std::unordered_map<std::uint64_t, std::uint64_t> bigrams_;
  std::unordered_map<std::uint64_t, std::uint64_t> trigrams_;
  // Derived.
  std::vector<std::uint64_t> unigram_history_;
  std::unordered_map<std::uint64_t, std::uint64_t> bigram_history_;
  std::uint64_t total_ = 0;
  double log_unknown_ = 0.0;
  double log_alpha_ = 0.0;
};

// Trains on the surfaces of every variant sentence of every tuple.
NGramLM BuildLanguageModel(const std::vector<CorpusTuple>& tuples);

}  // namespace ginaz

#endif  // GINAZ_LANGUAGE_MODEL_H_
