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
// End-to-end rewriting: sentence splitting, identification, one lattice per
// sentence and target combination, and selection.

#ifndef GINAZ_ENGINE_H_
#define GINAZ_ENGINE_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ginaz/bundle.h"
#include "ginaz/rank.h"
#include "ginaz/text.h"

namespace ginaz {

// One requested output: a target gender for the speaker, the listener, or
// both. An absent person is left as it is.
struct TargetCombo {
  std::optional<Gender> speaker;
  std::optional<Gender> listener;

  std::optional<Gender> For(Person p) const {
    return p == Person::kFirst ? speaker : listener;
  }
  bool operator==(const TargetCombo&) const = default;
};

// Cartesian product of the two selections, an empty selection standing for
// "absent". Order: speaker F before M, then listener F before M, absent last.
// Empty when both selections are empty.
std::vector<TargetCombo> EnumerateTargets(const TargetSpec& spec);

// Splits on newlines and after runs of . ! ? ؟ ۔ (the terminator stays with
// its sentence). Pieces are trimmed of whitespace; empty pieces are dropped.
std::vector<Sentence> SplitSentences(std::string_view text);

struct IdentifiedSentence {
  Sentence sentence;
  std::vector<TokenLabel> labels;
};

struct VariantResult {
  TargetCombo combo;
  std::vector<Sentence> sentences;          // one per input sentence
  std::vector<std::vector<bool>> changed;   // per sentence, per token
};

struct RewriteResult {
  std::vector<IdentifiedSentence> identified;
  std::vector<VariantResult> variants;      // EnumerateTargets order
};

// Immutable after construction; all methods are safe to call concurrently.
class Engine {
 public:
  explicit Engine(std::shared_ptr<const ModelBundle> bundle);

  const ModelBundle& bundle() const { return *bundle_; }

  // Normalizes `text` (DecodeError on invalid UTF-8), splits it and rewrites
  // every sentence for every combo.
  RewriteResult Rewrite(std::string_view text, const TargetSpec& spec) const;
  RewriteResult RewriteSentences(const std::vector<Sentence>& sentences,
                                 const TargetSpec& spec) const;

  std::vector<TokenLabel> Identify(const Sentence& sentence) const;

  // Alternatives for every token under `combo`. A token marked for both
  // persons is rewritten for the speaker first, then each intermediate for
  // the listener. Throws PreconditionError if labels and tokens disagree in
  // length.
  CandidateLattice BuildLattice(const Sentence& sentence,
                                const std::vector<TokenLabel>& labels,
                                TargetCombo combo) const;

  // Best candidate for `combo` given labels (predicted or gold).
  Sentence RewriteSentence(const Sentence& sentence,
                           const std::vector<TokenLabel>& labels,
                           TargetCombo combo) const;

 private:
  std::shared_ptr<const ModelBundle> bundle_;
};

}  // namespace ginaz

#endif  // GINAZ_ENGINE_H_
