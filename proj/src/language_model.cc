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

#include "ginaz/language_model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ginaz/errors.h"
#include "tsv.h"

namespace ginaz {

namespace {

constexpr NGramLM::WordId kMaxWords = (1u << 21) - 1;
constexpr std::string_view kBosWord = "<s>";
constexpr std::string_view kEosWord = "</s>";

}  // namespace

NGramLM NGramLM::FromSentences(
    const std::vector<std::vector<std::string>>& sentences, double alpha) {
  if (sentences.empty()) throw ModelError("cannot train an LM on no sentences");
  NGramLM lm;
  lm.alpha_ = alpha;
  lm.Intern(kBosWord);
  lm.Intern(kEosWord);
  std::vector<WordId> ids;
  for (const auto& s : sentences) {
    ids.clear();
    for (const auto& w : s) ids.push_back(lm.Intern(w));
    lm.AddSentence(ids);
  }
  lm.Finalize();
  return lm;
}

NGramLM::WordId NGramLM::Intern(std::string_view word) {
  auto it = ids_.find(std::string(word));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<WordId>(vocab_.size());
  if (id >= kMaxWords) throw ModelError("LM vocabulary too large");
  vocab_.emplace_back(word);
  ids_.emplace(std::string(word), id);
  unigrams_.push_back(0);
  return id;
}

void NGramLM::AddSentence(const std::vector<WordId>& ids) {
  WordId u = kBos;
  WordId v = kBos;
  auto step = [&](WordId w) {
    ++unigrams_[w];
    ++bigrams_[Pack(v, w)];
    ++trigrams_[Pack(u, v, w)];
    u = v;
    v = w;
  };
  for (WordId w : ids) step(w);
  step(kEos);
}

void NGramLM::Finalize() {
  unigram_history_.assign(vocab_.size(), 0);
  bigram_history_.clear();
  total_ = 0;
  for (std::uint64_t c : unigrams_) total_ += c;
  for (const auto& [key, c] : bigrams_) {
    unigram_history_[key >> 21] += c;
  }
  for (const auto& [key, c] : trigrams_) {
    bigram_history_[key >> 21] += c;
  }
  const double types = static_cast<double>(vocab_size());
  log_unknown_ = -std::log(static_cast<double>(total_) * (types + 1.0));
  log_alpha_ = std::log(alpha_);
}

NGramLM::WordId NGramLM::Id(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnknown : it->second;
}

double NGramLM::LogProb(WordId u, WordId v, WordId w) const {
  if (w == kUnknown) {
    // Unknown target: no n-gram can contain it.
    return 2.0 * log_alpha_ + log_unknown_;
  }
  if (u != kUnknown && v != kUnknown) {
    auto tri = trigrams_.find(Pack(u, v, w));
    if (tri != trigrams_.end()) {
      return std::log(static_cast<double>(tri->second) /
                      static_cast<double>(bigram_history_.at(Pack(u, v))));
    }
  }
  if (v != kUnknown) {
    auto bi = bigrams_.find(Pack(v, w));
    if (bi != bigrams_.end()) {
      return log_alpha_ +
             std::log(static_cast<double>(bi->second) /
                      static_cast<double>(unigram_history_[v]));
    }
  }
  const std::uint64_t c = unigrams_[w];
  if (c == 0) return 2.0 * log_alpha_ + log_unknown_;  // only <s>
  return 2.0 * log_alpha_ +
         std::log(static_cast<double>(c) / static_cast<double>(total_));
}

double NGramLM::LogProb(std::string_view u, std::string_view v,
                        std::string_view w) const {
  return LogProb(Id(u), Id(v), Id(w));
}

double NGramLM::Score(std::span<const std::string> tokens) const {
  if (tokens.empty()) throw PreconditionError("cannot score an empty sentence");
  WordId u = kBos;
  WordId v = kBos;
  double total = 0.0;
  for (const auto& t : tokens) {
    const WordId w = Id(t);
    total += LogProb(u, v, w);
    u = v;
    v = w;
  }
  total += LogProb(u, v, kEos);
  return total;
}

void NGramLM::Save(std::ostream& out) const {
  out << "alpha\t";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), alpha_);
  out.write(buf, res.ptr - buf);
  out << '\n';
  // Emit in sorted word order so the file is byte-stable.
  std::map<std::vector<std::string_view>, std::uint64_t> sorted;
  for (WordId w = 0; w < unigrams_.size(); ++w) {
    if (unigrams_[w] > 0) sorted[{vocab_[w]}] = unigrams_[w];
  }
  const auto mask = static_cast<std::uint64_t>(kMaxWords);
  for (const auto& [key, c] : bigrams_) {
    sorted[{vocab_[(key >> 21) & mask], vocab_[key & mask]}] = c;
  }
  for (const auto& [key, c] : trigrams_) {
    sorted[{vocab_[(key >> 42) & mask], vocab_[(key >> 21) & mask],
            vocab_[key & mask]}] = c;
  }
  for (const auto& [words, c] : sorted) {
    out << words.size();
    for (auto w : words) out << '\t' << w;
    out << '\t' << c << '\n';
  }
}

bool NGramLM::operator==(const NGramLM& other) const {
  std::ostringstream a;
  std::ostringstream b;
  Save(a);
  other.Save(b);
  return a.str() == b.str();
}

NGramLM NGramLM::Load(std::istream& in) {
  NGramLM lm;
  lm.Intern(kBosWord);
  lm.Intern(kEosWord);
  std::string line;
  bool have_alpha = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = tsv::Split(line);
    if (f[0] == "alpha" && f.size() == 2) {
      auto res = std::from_chars(f[1].data(), f[1].data() + f[1].size(),
                                 lm.alpha_);
      if (res.ec != std::errc()) throw tsv::FormatError("bad LM alpha");
      have_alpha = true;
      continue;
    }
    const auto order = tsv::ParseUnsigned(f[0]);
    if (order < 1 || order > 3 || f.size() != order + 2) {
      throw tsv::FormatError("malformed LM record");
    }
    std::vector<WordId> ids;
    for (std::size_t i = 1; i <= order; ++i) ids.push_back(lm.Intern(f[i]));
    const std::uint64_t c = tsv::ParseCount(f.back());
    if (order == 1) {
      lm.unigrams_[ids[0]] = c;
    } else if (order == 2) {
      lm.bigrams_[Pack(ids[0], ids[1])] = c;
    } else {
      lm.trigrams_[Pack(ids[0], ids[1], ids[2])] = c;
    }
  }
  if (!have_alpha) throw tsv::FormatError("LM file has no alpha record");
  if (lm.trigrams_.empty()) throw tsv::FormatError("LM file has no n-grams");
  lm.Finalize();
  return lm;
}

NGramLM BuildLanguageModel(const std::vector<CorpusTuple>& tuples) {
  std::vector<std::vector<std::string>> sentences;
  for (const auto& t : tuples) {
    for (const auto& [key, s] : t.variants) sentences.push_back(s.Surfaces());
  }
  if (sentences.empty()) throw ModelError("cannot train an LM on an empty corpus");
  return NGramLM::FromSentences(sentences);
}

}  // namespace ginaz
