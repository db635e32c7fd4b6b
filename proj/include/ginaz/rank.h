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
// In-context selection over a lattice of per-token alternatives.
//
// Candidates are ordered by LM score (higher first), then by the number of
// tokens that differ from the base (fewer first), then by the vector of
// alternative indices compared lexicographically (generator order first).
// The last key is total, so the winner is always unique.

#ifndef GINAZ_RANK_H_
#define GINAZ_RANK_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ginaz/generate.h"
#include "ginaz/language_model.h"
#include "ginaz/text.h"

namespace ginaz {

inline constexpr std::size_t kExhaustiveLimit = 4096;
inline constexpr std::size_t kBeamWidth = 16;

struct CandidateLattice {
  Sentence base;
  std::vector<AlternativeSet> slots;  // one per base token

  // Product of slot sizes, saturating at SIZE_MAX.
  std::size_t CandidateCount() const;
  // Surfaces for one choice of alternative indices.
  std::vector<std::string> Surfaces(std::span<const std::size_t> choice) const;
  // Number of positions whose chosen surface differs from the base token.
  std::size_t EditCount(std::span<const std::size_t> choice) const;
};

// Throws PreconditionError on an empty token list.
double LmScore(std::span<const std::string> tokens, const NGramLM& lm);

struct Selection {
  Sentence sentence;  // offsets inherited from the base
  double score = 0.0;
  std::vector<std::size_t> choice;
};

// True when candidate a ranks strictly before candidate b.
bool RanksBefore(double score_a, std::size_t edits_a,
                 std::span<const std::size_t> choice_a, double score_b,
                 std::size_t edits_b, std::span<const std::size_t> choice_b);

// Exhaustive search (with bound pruning) up to kExhaustiveLimit candidates,
// left-to-right beam search of width kBeamWidth beyond. Throws
// PreconditionError on a lattice without slots or with an empty slot.
Selection SelectBest(const CandidateLattice& lattice, const NGramLM& lm);

}  // namespace ginaz

#endif  // GINAZ_RANK_H_
