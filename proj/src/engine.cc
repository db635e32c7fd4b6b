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

#include "ginaz/engine.h"

#include <cstdint>
#include <utility>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "ginaz/corpus.h"
#include "ginaz/errors.h"
#include "ginaz/generate.h"
#include "ginaz/identifier.h"

namespace ginaz {

namespace {

// F first, then M, then absent.
std::vector<std::optional<Gender>> SelectionOrder(const std::set<Gender>& s) {
  std::vector<std::optional<Gender>> out;
  if (s.count(Gender::kFeminine)) out.push_back(Gender::kFeminine);
  if (s.count(Gender::kMasculine)) out.push_back(Gender::kMasculine);
  if (out.empty()) out.push_back(std::nullopt);
  return out;
}

bool IsTerminator(UChar32 c) {
  return c == '.' || c == '!' || c == '?' || c == 0x061F || c == 0x06D4;
}

std::string_view Trim(std::string_view piece) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(piece.data());
  const auto length = static_cast<std::int32_t>(piece.size());
  std::int32_t begin = 0;
  while (begin < length) {
    std::int32_t next = begin;
    UChar32 c;
    U8_NEXT(bytes, next, length, c);
    if (!u_isUWhiteSpace(c)) break;
    begin = next;
  }
  std::int32_t end = length;
  while (end > begin) {
    std::int32_t prev = end;
    UChar32 c;
    U8_PREV(bytes, 0, prev, c);
    if (!u_isUWhiteSpace(c)) break;
    end = prev;
  }
  return piece.substr(begin, end - begin);
}

}  // namespace

std::vector<TargetCombo> EnumerateTargets(const TargetSpec& spec) {
  if (spec.speaker.empty() && spec.listener.empty()) return {};
  std::vector<TargetCombo> out;
  for (auto s : SelectionOrder(spec.speaker)) {
    for (auto l : SelectionOrder(spec.listener)) out.push_back({s, l});
  }
  return out;
}

std::vector<Sentence> SplitSentences(std::string_view text) {
  ValidateUtf8(text);
  std::vector<Sentence> out;
  auto emit = [&](std::size_t begin, std::size_t end) {
    const std::string_view piece = Trim(text.substr(begin, end - begin));
    if (!piece.empty()) out.push_back(Tokenize(piece));
  };
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::size_t start = 0;
  std::int32_t i = 0;
  while (i < length) {
    const std::int32_t at = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c == '\n') {
      emit(start, static_cast<std::size_t>(at));
      start = static_cast<std::size_t>(i);
    } else if (IsTerminator(c)) {
      // Keep the whole run (e.g. "..." or "؟!") with the sentence.
      while (i < length) {
        std::int32_t next = i;
        UChar32 d;
        U8_NEXT(bytes, next, length, d);
        if (!IsTerminator(d)) break;
        i = next;
      }
      emit(start, static_cast<std::size_t>(i));
      start = static_cast<std::size_t>(i);
    }
  }
  emit(start, text.size());
  return out;
}

Engine::Engine(std::shared_ptr<const ModelBundle> bundle)
    : bundle_(std::move(bundle)) {
  if (!bundle_) throw PreconditionError("engine needs a model bundle");
}

std::vector<TokenLabel> Engine::Identify(const Sentence& sentence) const {
  return ginaz::Identify(sentence, bundle_->identifier);
}

CandidateLattice Engine::BuildLattice(const Sentence& sentence,
                                      const std::vector<TokenLabel>& labels,
                                      TargetCombo combo) const {
  if (labels.size() != sentence.tokens.size()) {
    throw PreconditionError("label count does not match token count");
  }
  const GeneratorModels models = GeneratorModels::Of(*bundle_);
  CandidateLattice lattice{sentence, {}};
  lattice.slots.reserve(sentence.tokens.size());
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& token = sentence.tokens[i];
    const std::string_view prev =
        i == 0 ? kSentenceBoundary : std::string_view(sentence.tokens[i - 1].surface);
    // Start from the identity and apply each requested person in turn.
    AlternativeSet slot{token, {}, {{token.surface, Provenance::kIdentity, 0.0}},
                        false};
    for (Person p : kPersons) {
      const auto target = combo.For(p);
      if (!target) continue;
      const GenderMark mark{p, *target};
      AlternativeSet next{token, mark, {}, slot.unrewritten};
      for (const auto& current : slot.alternatives) {
        Token intermediate = token;
        intermediate.surface = current.surface;
        const AlternativeSet step =
            GenerateAlternatives(prev, intermediate, labels[i], mark, models);
        next.unrewritten = next.unrewritten || step.unrewritten;
        for (const auto& alt : step.alternatives) {
          bool seen = false;
          for (const auto& a : next.alternatives) seen |= a.surface == alt.surface;
          if (!seen) next.alternatives.push_back(alt);
        }
      }
      slot = std::move(next);
    }
    lattice.slots.push_back(std::move(slot));
  }
  return lattice;
}

Sentence Engine::RewriteSentence(const Sentence& sentence,
                                 const std::vector<TokenLabel>& labels,
                                 TargetCombo combo) const {
  if (sentence.tokens.empty()) return sentence;
  const CandidateLattice lattice = BuildLattice(sentence, labels, combo);
  if (lattice.CandidateCount() == 1) {
    return WithSurfaces(sentence, lattice.Surfaces(
                                      std::vector<std::size_t>(
                                          lattice.slots.size(), 0)));
  }
  return SelectBest(lattice, bundle_->lm).sentence;
}

RewriteResult Engine::RewriteSentences(const std::vector<Sentence>& sentences,
                                       const TargetSpec& spec) const {
  RewriteResult result;
  result.identified.reserve(sentences.size());
  for (const auto& s : sentences) result.identified.push_back({s, Identify(s)});
  for (const TargetCombo& combo : EnumerateTargets(spec)) {
    VariantResult variant{combo, {}, {}};
    for (const auto& [sentence, labels] : result.identified) {
      Sentence out = RewriteSentence(sentence, labels, combo);
      std::vector<bool> changed(out.tokens.size());
      for (std::size_t i = 0; i < out.tokens.size(); ++i) {
        changed[i] = out.tokens[i].surface != sentence.tokens[i].surface;
      }
      variant.sentences.push_back(std::move(out));
      variant.changed.push_back(std::move(changed));
    }
    result.variants.push_back(std::move(variant));
  }
  return result;
}

RewriteResult Engine::Rewrite(std::string_view text,
                              const TargetSpec& spec) const {
  return RewriteSentences(SplitSentences(Normalize(text)), spec);
}

}  // namespace ginaz
