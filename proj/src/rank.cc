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

#include "ginaz/rank.h"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "ginaz/errors.h"

namespace ginaz {

std::size_t CandidateLattice::CandidateCount() const {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t count = 1;
  for (const auto& slot : slots) {
    const std::size_t n = slot.alternatives.size();
    if (n == 0) return 0;
    if (count > kMax / n) return kMax;
    count *= n;
  }
  return count;
}

std::vector<std::string> CandidateLattice::Surfaces(
    std::span<const std::size_t> choice) const {
  std::vector<std::string> out;
  out.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    out.push_back(slots[i].alternatives.at(choice[i]).surface);
  }
  return out;
}

std::size_t CandidateLattice::EditCount(
    std::span<const std::size_t> choice) const {
  std::size_t edits = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].alternatives.at(choice[i]).surface !=
        base.tokens.at(i).surface) {
      ++edits;
    }
  }
  return edits;
}

double LmScore(std::span<const std::string> tokens, const NGramLM& lm) {
  return lm.Score(tokens);
}

bool RanksBefore(double score_a, std::size_t edits_a,
                 std::span<const std::size_t> choice_a, double score_b,
                 std::size_t edits_b, std::span<const std::size_t> choice_b) {
  if (score_a != score_b) return score_a > score_b;
  if (edits_a != edits_b) return edits_a < edits_b;
  return std::lexicographical_compare(choice_a.begin(), choice_a.end(),
                                      choice_b.begin(), choice_b.end());
}

namespace {

using WordId = NGramLM::WordId;

// Interned ids and edit flags for every alternative, so the search never
// touches strings.
struct PreparedLattice {
  std::vector<std::vector<WordId>> ids;
  std::vector<std::vector<std::uint8_t>> edit;

  PreparedLattice(const CandidateLattice& lattice, const NGramLM& lm) {
    ids.resize(lattice.slots.size());
    edit.resize(lattice.slots.size());
    for (std::size_t i = 0; i < lattice.slots.size(); ++i) {
      for (const auto& alt : lattice.slots[i].alternatives) {
        ids[i].push_back(lm.Id(alt.surface));
        edit[i].push_back(alt.surface != lattice.base.tokens[i].surface);
      }
    }
  }
};

struct Best {
  bool found = false;
  double score = 0.0;
  std::size_t edits = 0;
  std::vector<std::size_t> choice;

  void Offer(double s, std::size_t e, const std::vector<std::size_t>& c) {
    if (!found || RanksBefore(s, e, c, score, edits, choice)) {
      found = true;
      score = s;
      edits = e;
      choice = c;
    }
  }
};

// Depth-first enumeration. Partial sums accumulate left to right exactly as
// NGramLM::Score does, so totals match a direct rescoring bit for bit. Every
// term is a log-probability (<= 0), so a prefix already below the best total
// cannot win or tie and is pruned.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const PreparedLattice& prepared, const NGramLM& lm)
      : prepared_(prepared), lm_(lm), choice_(prepared.ids.size()) {}

  Best Run() {
    Visit(0, NGramLM::kBos, NGramLM::kBos, 0.0, 0);
    return best_;
  }

 private:
  void Visit(std::size_t i, WordId u, WordId v, double partial,
             std::size_t edits) {
    if (best_.found && partial < best_.score) return;
    if (i == choice_.size()) {
      best_.Offer(partial + lm_.LogProb(u, v, NGramLM::kEos), edits, choice_);
      return;
    }
    const auto& ids = prepared_.ids[i];
    for (std::size_t k = 0; k < ids.size(); ++k) {
      choice_[i] = k;
      Visit(i + 1, v, ids[k], partial + lm_.LogProb(u, v, ids[k]),
            edits + prepared_.edit[i][k]);
    }
  }

  const PreparedLattice& prepared_;
  const NGramLM& lm_;
  std::vector<std::size_t> choice_;
  Best best_;
};

Best BeamSearch(const PreparedLattice& prepared, const NGramLM& lm) {
  struct State {
    WordId u;
    WordId v;
    double partial;
    std::size_t edits;
    std::vector<std::size_t> choice;
  };
  auto before = [](const State& a, const State& b) {
    return RanksBefore(a.partial, a.edits, a.choice, b.partial, b.edits,
                       b.choice);
  };
  std::vector<State> beam = {{NGramLM::kBos, NGramLM::kBos, 0.0, 0, {}}};
  for (std::size_t i = 0; i < prepared.ids.size(); ++i) {
    std::vector<State> next;
    next.reserve(beam.size() * prepared.ids[i].size());
    for (const auto& s : beam) {
      for (std::size_t k = 0; k < prepared.ids[i].size(); ++k) {
        const WordId w = prepared.ids[i][k];
        State t{s.v, w, s.partial + lm.LogProb(s.u, s.v, w),
                s.edits + prepared.edit[i][k], s.choice};
        t.choice.push_back(k);
        next.push_back(std::move(t));
      }
    }
    const std::size_t keep = std::min(kBeamWidth, next.size());
    std::partial_sort(next.begin(), next.begin() + keep, next.end(), before);
    next.resize(keep);
    beam = std::move(next);
  }
  Best best;
  for (const auto& s : beam) {
    best.Offer(s.partial + lm.LogProb(s.u, s.v, NGramLM::kEos), s.edits,
               s.choice);
  }
  return best;
}

}  // namespace

Selection SelectBest(const CandidateLattice& lattice, const NGramLM& lm) {
  if (lattice.slots.empty()) {
    throw PreconditionError("cannot rank an empty lattice");
  }
  if (lattice.slots.size() != lattice.base.tokens.size()) {
    throw PreconditionError("lattice slots do not match base tokens");
  }
  const std::size_t count = lattice.CandidateCount();
  if (count == 0) throw PreconditionError("lattice has an empty slot");

  const PreparedLattice prepared(lattice, lm);
  const Best best = count <= kExhaustiveLimit
                        ? ExhaustiveSearch(prepared, lm).Run()
                        : BeamSearch(prepared, lm);
  const auto surfaces = lattice.Surfaces(best.choice);
  return {WithSurfaces(lattice.base, surfaces), best.score, best.choice};
}

}  // namespace ginaz
