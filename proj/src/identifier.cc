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

#include "ginaz/identifier.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "ginaz/errors.h"

namespace ginaz {

namespace {

constexpr char kMagic[4] = {'G', 'Z', 'I', 'D'};
constexpr std::uint32_t kLayoutVersion = 1;

int LabelIndex(const TokenLabel& label) {
  const auto& all = AllLabels();
  const auto it = std::find(all.begin(), all.end(), label);
  return static_cast<int>(it - all.begin());
}

bool HasLetter(std::string_view word) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(word.data());
  const auto length = static_cast<std::int32_t>(word.size());
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c >= 0 && u_isalpha(c)) return true;
  }
  return false;
}

// --- little-endian binary helpers -----------------------------------------

void PutU32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

void PutU64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

void PutString(std::ostream& out, std::string_view s) {
  PutU32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

BundleError Truncated() {
  return BundleError(BundleError::Kind::kFormat, "identifier model truncated");
}

std::uint64_t GetLE(std::istream& in, int bytes) {
  char b[8];
  if (!in.read(b, bytes)) throw Truncated();
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  }
  return v;
}

std::uint32_t GetU32(std::istream& in) {
  return static_cast<std::uint32_t>(GetLE(in, 4));
}

std::string GetString(std::istream& in) {
  const std::uint32_t n = GetU32(in);
  if (n > (1u << 20)) throw Truncated();
  std::string s(n, '\0');
  if (n > 0 && !in.read(s.data(), n)) throw Truncated();
  return s;
}

// --- averaged perceptron ---------------------------------------------------

class Perceptron {
 public:
  using Weights = IdentifierModel::Weights;

  int Predict(const std::vector<std::string>& features) const {
    Weights score{};
    for (const auto& f : features) {
      auto it = weights_.find(f);
      if (it == weights_.end()) continue;
      for (std::size_t c = 0; c < kLabelClassCount; ++c) score[c] += it->second[c];
    }
    return static_cast<int>(std::max_element(score.begin(), score.end()) -
                            score.begin());
  }

  void Update(const std::vector<std::string>& features, int gold, int guess) {
    ++step_;
    if (gold == guess) return;
    for (const auto& f : features) {
      auto& w = weights_[f];
      auto& t = totals_[f];
      w[gold] += 1.0;
      w[guess] -= 1.0;
      t[gold] += step_;
      t[guess] -= step_;
    }
  }

  // w_avg = w - totals / step (timestamped running average).
  std::unordered_map<std::string, Weights> Averaged() const {
    std::unordered_map<std::string, Weights> out;
    const double n = static_cast<double>(std::max<std::uint64_t>(step_, 1));
    for (const auto& [f, w] : weights_) {
      const Weights& t = totals_.at(f);
      Weights avg{};
      bool nonzero = false;
      for (std::size_t c = 0; c < kLabelClassCount; ++c) {
        avg[c] = w[c] - t[c] / n;
        nonzero |= avg[c] != 0.0;
      }
      if (nonzero) out.emplace(f, avg);
    }
    return out;
  }

 private:
  std::unordered_map<std::string, Weights> weights_;
  std::unordered_map<std::string, Weights> totals_;
  std::uint64_t step_ = 0;
};

struct Example {
  std::vector<std::string> tokens;
  std::vector<int> labels;
};

}  // namespace

std::vector<std::string> TokenFeatures(const std::vector<std::string>& tokens,
                                       std::size_t index) {
  const std::string& w = tokens[index];
  const auto cps = CodePoints(w);
  std::vector<std::string> f;
  f.reserve(20);
  f.emplace_back("bias");
  f.push_back("w=" + w);
  std::string prefix;
  std::string suffix;
  for (std::size_t n = 1; n <= 4 && n <= cps.size(); ++n) {
    prefix += cps[n - 1];
    suffix.insert(0, cps[cps.size() - n]);
    f.push_back("p" + std::to_string(n) + "=" + prefix);
    f.push_back("s" + std::to_string(n) + "=" + suffix);
  }
  const std::string last = cps.empty() ? std::string() : cps.back();
  const std::string prev = index > 0 ? tokens[index - 1] : "<s>";
  const std::string prev2 = index > 1 ? tokens[index - 2] : "<s>";
  const std::string next =
      index + 1 < tokens.size() ? tokens[index + 1] : "</s>";
  f.push_back("prev=" + prev);
  f.push_back("prev2=" + prev2);
  f.push_back("next=" + next);
  f.push_back("prev|s1=" + prev + "|" + last);
  f.push_back("prev2|s1=" + prev2 + "|" + last);
  if (index == 0) f.emplace_back("pos=first");
  if (index + 1 == tokens.size()) f.emplace_back("pos=last");
  return f;
}

IdentifierModel::Weights IdentifierModel::Score(
    const std::vector<std::string>& tokens, std::size_t index) const {
  Weights score{};
  for (const auto& f : TokenFeatures(tokens, index)) {
    auto it = weights_.find(f);
    if (it == weights_.end()) continue;
    for (std::size_t c = 0; c < kLabelClassCount; ++c) score[c] += it->second[c];
  }
  return score;
}

IdentifierModel TrainIdentifier(const std::vector<CorpusTuple>& tuples,
                                const IdentifierOptions& options) {
  if (tuples.empty()) throw ModelError("cannot train identifier on no tuples");
  std::vector<Example> examples;
  std::set<std::pair<std::vector<std::string>, std::vector<int>>> seen;
  for (const CorpusTuple& t : tuples) {
    for (const auto& [key, sentence] : t.variants) {
      Example ex;
      ex.tokens = sentence.Surfaces();
      for (const TokenLabel& label : t.labels) {
        ex.labels.push_back(LabelIndex(VariantLabel(label, key)));
      }
      if (seen.insert({ex.tokens, ex.labels}).second) {
        examples.push_back(std::move(ex));
      }
    }
  }

  IdentifierModel model;
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  std::vector<std::vector<std::string>> features;
  for (std::size_t e = 0; e < examples.size(); ++e) {
    for (std::size_t i = 0; i < examples[e].tokens.size(); ++i) {
      ++model.lexicon_[examples[e].tokens[i]][examples[e].labels[i]];
      positions.emplace_back(e, i);
    }
  }
  features.reserve(positions.size());
  for (const auto& [e, i] : positions) {
    features.push_back(TokenFeatures(examples[e].tokens, i));
  }

  Perceptron perceptron;
  std::vector<std::size_t> order(positions.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(options.seed);
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k : order) {
      const auto& [e, i] = positions[k];
      const int gold = examples[e].labels[i];
      perceptron.Update(features[k], gold, perceptron.Predict(features[k]));
    }
  }
  model.weights_ = perceptron.Averaged();
  return model;
}

std::vector<TokenLabel> Identify(const Sentence& sentence,
                                 const IdentifierModel& model) {
  const auto tokens = sentence.Surfaces();
  const auto& all = AllLabels();
  std::vector<TokenLabel> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!HasLetter(tokens[i])) {
      out.emplace_back();
      continue;
    }
    const auto entry = model.label_lexicon().find(tokens[i]);
    if (entry != model.label_lexicon().end() && entry->second.size() == 1) {
      out.push_back(all[entry->second.begin()->first]);
      continue;
    }
    const auto score = model.Score(tokens, i);
    int best = -1;
    std::uint32_t best_count = 0;
    auto consider = [&](int c, std::uint32_t count) {
      if (best < 0 || score[c] > score[best] ||
          (score[c] == score[best] && count > best_count)) {
        best = c;
        best_count = count;
      }
    };
    if (entry != model.label_lexicon().end()) {
      for (const auto& [c, count] : entry->second) consider(c, count);
    } else {
      for (int c = 0; c < static_cast<int>(kLabelClassCount); ++c) {
        consider(c, 0);
      }
    }
    out.push_back(all[best]);
  }
  return out;
}

void IdentifierModel::Save(std::ostream& out) const {
  out.write(kMagic, 4);
  PutU32(out, kLayoutVersion);
  PutU32(out, kLabelClassCount);
  for (const TokenLabel& l : AllLabels()) PutString(out, l.Code());
  PutU64(out, lexicon_.size());
  for (const auto& [surface, counts] : lexicon_) {
    PutString(out, surface);
    PutU32(out, static_cast<std::uint32_t>(counts.size()));
    for (const auto& [c, n] : counts) {
      PutU32(out, static_cast<std::uint32_t>(c));
      PutU32(out, n);
    }
  }
  // Sorted so the file is byte-stable.
  std::vector<const std::pair<const std::string, Weights>*> sorted;
  for (const auto& entry : weights_) sorted.push_back(&entry);
  std::sort(sorted.begin(), sorted.end(),
            [](auto* a, auto* b) { return a->first < b->first; });
  PutU64(out, sorted.size());
  for (const auto* entry : sorted) {
    PutString(out, entry->first);
    for (double w : entry->second) PutU64(out, std::bit_cast<std::uint64_t>(w));
  }
}

IdentifierModel IdentifierModel::Load(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kMagic)) {
    throw BundleError(BundleError::Kind::kFormat, "identifier: bad magic");
  }
  if (GetU32(in) != kLayoutVersion) {
    throw BundleError(BundleError::Kind::kVersionMismatch,
                      "identifier: unsupported layout version");
  }
  if (GetU32(in) != kLabelClassCount) throw Truncated();
  for (const TokenLabel& l : AllLabels()) {
    if (GetString(in) != l.Code()) {
      throw BundleError(BundleError::Kind::kFormat,
                        "identifier: label inventory mismatch");
    }
  }
  IdentifierModel model;
  const std::uint64_t entries = GetLE(in, 8);
  for (std::uint64_t e = 0; e < entries; ++e) {
    std::string surface = GetString(in);
    const std::uint32_t k = GetU32(in);
    auto& counts = model.lexicon_[surface];
    for (std::uint32_t j = 0; j < k; ++j) {
      const std::uint32_t c = GetU32(in);
      const std::uint32_t n = GetU32(in);
      if (c >= kLabelClassCount || n == 0) throw Truncated();
      counts[static_cast<int>(c)] = n;
    }
  }
  const std::uint64_t features = GetLE(in, 8);
  for (std::uint64_t e = 0; e < features; ++e) {
    std::string name = GetString(in);
    Weights w{};
    for (auto& x : w) x = std::bit_cast<double>(GetLE(in, 8));
    model.weights_.emplace(std::move(name), w);
  }
  return model;
}

}  // namespace ginaz
