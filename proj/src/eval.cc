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

#include "ginaz/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

namespace ginaz {

namespace {

using Tokens = std::vector<std::string>;

// Levenshtein alignment; ties prefer substitution, then deletion.
EditSet AlignEdits(const Tokens& source, const Tokens& target) {
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  std::vector<std::vector<std::size_t>> d(n + 1,
                                          std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub =
          d[i - 1][j - 1] + (source[i - 1] == target[j - 1] ? 0 : 1);
      d[i][j] = std::min({sub, d[i - 1][j] + 1, d[i][j - 1] + 1});
    }
  }
  EditSet edits;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        d[i][j] == d[i - 1][j - 1] + (source[i - 1] == target[j - 1] ? 0 : 1)) {
      if (source[i - 1] != target[j - 1]) {
        edits.insert({i - 1, source[i - 1], target[j - 1]});
      }
      --i;
      --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      edits.insert({i - 1, source[i - 1], ""});
      --i;
    } else {
      edits.insert({i, "", target[j - 1]});
      --j;
    }
  }
  return edits;
}

}  // namespace

EditSet ExtractEdits(const Tokens& source, const Tokens& target) {
  if (source.size() != target.size()) return AlignEdits(source, target);
  EditSet edits;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] != target[i]) edits.insert({i, source[i], target[i]});
  }
  return edits;
}

EditCounts CountEdits(const EditSet& hypothesis, const EditSet& reference) {
  EditCounts c;
  for (const Edit& e : hypothesis) {
    if (reference.count(e)) {
      ++c.tp;
    } else {
      ++c.fp;
    }
  }
  for (const Edit& e : reference) {
    if (!hypothesis.count(e)) ++c.fn;
  }
  return c;
}

double FBeta(const EditCounts& c, double beta) {
  if (c.tp == 0 && c.fp == 0 && c.fn == 0) return 1.0;
  if (c.tp == 0) return 0.0;
  const double p = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  const double r = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  const double b2 = beta * beta;
  return (1.0 + b2) * p * r / (b2 * p + r);
}

double FBeta(const EditSet& hypothesis, const EditSet& reference, double beta) {
  return FBeta(CountEdits(hypothesis, reference), beta);
}

BleuStats& BleuStats::operator+=(const BleuStats& o) {
  for (int n = 0; n < 4; ++n) {
    matches[n] += o.matches[n];
    totals[n] += o.totals[n];
  }
  hypothesis_length += o.hypothesis_length;
  reference_length += o.reference_length;
  return *this;
}

BleuStats CollectBleuStats(const Tokens& hypothesis, const Tokens& reference) {
  BleuStats s;
  s.hypothesis_length = hypothesis.size();
  s.reference_length = reference.size();
  for (std::size_t n = 1; n <= 4; ++n) {
    std::map<std::vector<std::string>, std::size_t> ref_counts;
    for (std::size_t i = 0; i + n <= reference.size(); ++i) {
      ++ref_counts[Tokens(reference.begin() + i, reference.begin() + i + n)];
    }
    std::map<std::vector<std::string>, std::size_t> hyp_counts;
    for (std::size_t i = 0; i + n <= hypothesis.size(); ++i) {
      ++hyp_counts[Tokens(hypothesis.begin() + i, hypothesis.begin() + i + n)];
    }
    for (const auto& [gram, count] : hyp_counts) {
      s.totals[n - 1] += count;
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) s.matches[n - 1] += std::min(count, it->second);
    }
  }
  return s;
}

double BleuFromStats(const BleuStats& s) {
  if (s.hypothesis_length == 0 || s.matches[0] == 0) return 0.0;
  double log_sum =
      std::log(static_cast<double>(s.matches[0]) / static_cast<double>(s.totals[0]));
  for (int n = 1; n < 4; ++n) {
    log_sum += std::log(static_cast<double>(s.matches[n] + 1) /
                        static_cast<double>(s.totals[n] + 1));
  }
  const double c = static_cast<double>(s.hypothesis_length);
  const double r = static_cast<double>(s.reference_length);
  const double log_bp = c < r ? 1.0 - r / c : 0.0;
  return std::exp(log_bp + log_sum / 4.0);
}

double SentenceBleu(const Tokens& hypothesis, const Tokens& reference) {
  return BleuFromStats(CollectBleuStats(hypothesis, reference));
}

double CorpusBleu(const std::vector<Tokens>& hypotheses,
                  const std::vector<Tokens>& references) {
  BleuStats total;
  const std::size_t n = std::min(hypotheses.size(), references.size());
  for (std::size_t i = 0; i < n; ++i) {
    total += CollectBleuStats(hypotheses[i], references[i]);
  }
  return BleuFromStats(total);
}

std::vector<Metric> EvaluateCorpus(const Engine& engine,
                                   const std::vector<CorpusTuple>& tuples,
                                   const std::string& split) {
  EditCounts counts;
  std::vector<Tokens> hypotheses;
  std::vector<Tokens> sources;
  std::vector<Tokens> references;
  std::size_t exact = 0;
  std::size_t label_hits = 0;
  std::size_t label_total = 0;
  for (const CorpusTuple& tuple : tuples) {
    const auto labels = engine.Identify(tuple.base);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      label_hits += labels[i] == tuple.labels[i];
      ++label_total;
    }
    const Tokens source = tuple.base.Surfaces();
    for (const auto& [key, gold] : tuple.variants) {
      const TargetCombo combo{key.speaker, key.listener};
      const Tokens hyp =
          engine.RewriteSentence(tuple.base, labels, combo).Surfaces();
      const Tokens ref = gold.Surfaces();
      counts += CountEdits(ExtractEdits(source, hyp), ExtractEdits(source, ref));
      exact += hyp == ref;
      hypotheses.push_back(hyp);
      sources.push_back(source);
      references.push_back(ref);
    }
  }
  auto ratio = [](std::size_t a, std::size_t b) {
    return b == 0 ? 1.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  return {
      {"f0.5", split, FBeta(counts)},
      {"precision", split, ratio(counts.tp, counts.tp + counts.fp)},
      {"recall", split, ratio(counts.tp, counts.tp + counts.fn)},
      {"bleu", split, CorpusBleu(hypotheses, references)},
      {"bleu_source", split, CorpusBleu(sources, references)},
      {"sentence_accuracy", split, ratio(exact, hypotheses.size())},
      {"label_accuracy", split, ratio(label_hits, label_total)},
  };
}

void WriteMetrics(const std::vector<Metric>& metrics, std::ostream& out) {
  char value[64];
  for (const Metric& m : metrics) {
    std::snprintf(value, sizeof(value), "%.6f", m.value);
    out << m.name << '\t' << m.split << '\t' << value << '\n';
  }
}

}  // namespace ginaz
