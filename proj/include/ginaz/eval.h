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
// Evaluation metrics: token edit F-beta and BLEU, plus a corpus harness that
// rewrites every tuple's base sentence to each variant and scores it.

#ifndef GINAZ_EVAL_H_
#define GINAZ_EVAL_H_

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ginaz/corpus.h"
#include "ginaz/engine.h"

namespace ginaz {

struct Edit {
  std::size_t index;  // position in the source sentence
  std::string from;   // empty for an insertion
  std::string to;     // empty for a deletion
  auto operator<=>(const Edit&) const = default;
};

using EditSet = std::set<Edit>;

// Positional substitutions when the lengths agree; otherwise a minimum edit
// distance alignment over tokens.
EditSet ExtractEdits(const std::vector<std::string>& source,
                     const std::vector<std::string>& target);

struct EditCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  EditCounts& operator+=(const EditCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
};

EditCounts CountEdits(const EditSet& hypothesis, const EditSet& reference);

// 1.0 when nothing was expected and nothing proposed; 0.0 when TP is zero
// otherwise.
double FBeta(const EditCounts& counts, double beta = 0.5);
double FBeta(const EditSet& hypothesis, const EditSet& reference,
             double beta = 0.5);

// Clipped n-gram statistics for n = 1..4.
struct BleuStats {
  std::size_t matches[4] = {0, 0, 0, 0};
  std::size_t totals[4] = {0, 0, 0, 0};
  std::size_t hypothesis_length = 0;
  std::size_t reference_length = 0;

  BleuStats& operator+=(const BleuStats& o);
};

BleuStats CollectBleuStats(const std::vector<std::string>& hypothesis,
                           const std::vector<std::string>& reference);
// Uniform weights, brevity penalty, add-one smoothing for n >= 2. Zero for an
// empty hypothesis or no unigram match.
double BleuFromStats(const BleuStats& stats);
double SentenceBleu(const std::vector<std::string>& hypothesis,
                    const std::vector<std::string>& reference);
double CorpusBleu(const std::vector<std::vector<std::string>>& hypotheses,
                  const std::vector<std::vector<std::string>>& references);

struct Metric {
  std::string name;
  std::string split;
  double value;
};

// Rewrites each tuple's base sentence to all four variants with predicted
// labels and scores against the gold variants:
//
//   f0.5                edit F0.5, counts summed over the split
//   precision, recall   of the same counts
//   bleu                corpus BLEU of the rewrites
//   bleu_source         corpus BLEU of the unrewritten base (baseline)
//   sentence_accuracy   share of exact variant matches
//   label_accuracy      token-level identification accuracy on the base
std::vector<Metric> EvaluateCorpus(const Engine& engine,
                                   const std::vector<CorpusTuple>& tuples,
                                   const std::string& split);

// metric<TAB>split<TAB>value with six decimals, one line per metric.
void WriteMetrics(const std::vector<Metric>& metrics, std::ostream& out);

}  // namespace ginaz

#endif  // GINAZ_EVAL_H_
