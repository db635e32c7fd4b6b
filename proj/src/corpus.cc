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

#include "ginaz/corpus.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ginaz/errors.h"

namespace ginaz {

std::string VariantKey::Code() const {
  return {GenderCode(speaker), GenderCode(listener)};
}

const std::vector<VariantKey>& AllVariantKeys() {
  static const std::vector<VariantKey> keys = {
      {Gender::kMasculine, Gender::kMasculine},
      {Gender::kMasculine, Gender::kFeminine},
      {Gender::kFeminine, Gender::kMasculine},
      {Gender::kFeminine, Gender::kFeminine}};
  return keys;
}

namespace {

std::optional<VariantKey> ParseVariantKey(std::string_view code) {
  for (const VariantKey& k : AllVariantKeys()) {
    if (k.Code() == code) return k;
  }
  return std::nullopt;
}

std::vector<std::string_view> SplitSpaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

class BlockParser {
 public:
  explicit BlockParser(const std::string& source) : source_(source) {}

  void Line(std::size_t number, std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      Finish();
      return;
    }
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) Fail(number, "missing TAB separator");
    const std::string_view tag = line.substr(0, tab);
    const std::string_view body = line.substr(tab + 1);

    if (tag == "#id") {
      Finish();
      current_.emplace();
      current_->id = std::string(body);
      current_->line = number;
      return;
    }
    if (!current_) Fail(number, "record outside a block (expected #id)");
    if (tag == "B") {
      current_->base = ReadSentence(number, body);
      base_line_ = number;
    } else if (tag == "L") {
      labels_line_ = number;
      for (std::string_view code : SplitSpaces(body)) {
        try {
          current_->labels.push_back(TokenLabel::Parse(code));
        } catch (const std::invalid_argument& e) {
          Fail(number, e.what());
        }
      }
    } else if (auto key = ParseVariantKey(tag)) {
      if (current_->variants.count(*key)) {
        Fail(number, "duplicate variant " + key->Code());
      }
      current_->variants.emplace(*key, ReadSentence(number, body));
      variant_lines_[*key] = number;
    } else {
      Fail(number, "unknown record tag '" + std::string(tag) + "'");
    }
  }

  std::vector<CorpusTuple> Take() {
    Finish();
    return std::move(tuples_);
  }

 private:
  [[noreturn]] void Fail(std::size_t line, const std::string& what) const {
    throw ParseError(source_, line, what);
  }

  Sentence ReadSentence(std::size_t number, std::string_view body) const {
    try {
      return Tokenize(Normalize(body));
    } catch (const DecodeError& e) {
      Fail(number, e.what());
    }
  }

  void Finish() {
    if (!current_) return;
    CorpusTuple& t = *current_;
    const std::size_t at = t.line;
    if (base_line_ == 0) Fail(at, "block '" + t.id + "' has no B line");
    if (labels_line_ == 0) Fail(at, "block '" + t.id + "' has no L line");
    const std::size_t n = t.base.tokens.size();
    if (t.labels.size() != n) {
      Fail(labels_line_, "label count " + std::to_string(t.labels.size()) +
                             " does not match token count " +
                             std::to_string(n));
    }
    for (const VariantKey& key : AllVariantKeys()) {
      auto it = t.variants.find(key);
      if (it == t.variants.end()) {
        Fail(at, "block '" + t.id + "' is missing variant " + key.Code());
      }
      const std::size_t line = variant_lines_[key];
      if (it->second.tokens.size() != n) {
        Fail(line, "variant " + key.Code() + " has " +
                       std::to_string(it->second.tokens.size()) +
                       " tokens, base has " + std::to_string(n));
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (t.labels[i].empty() &&
            it->second.tokens[i].surface != t.base.tokens[i].surface) {
          Fail(line, "unmarked token " + std::to_string(i) +
                         " differs from base in variant " + key.Code());
        }
      }
    }
    tuples_.push_back(std::move(t));
    current_.reset();
    base_line_ = labels_line_ = 0;
    variant_lines_.clear();
  }

  std::string source_;
  std::optional<CorpusTuple> current_;
  std::size_t base_line_ = 0;
  std::size_t labels_line_ = 0;
  std::map<VariantKey, std::size_t> variant_lines_;
  std::vector<CorpusTuple> tuples_;
};

}  // namespace

std::vector<CorpusTuple> ParseCorpus(std::string_view text,
                                     const std::string& source_name) {
  BlockParser parser(source_name);
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++number;
    parser.Line(number, text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return parser.Take();
}

std::vector<CorpusTuple> ParseCorpusFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open corpus file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseCorpus(buf.str(), path);
}

void ForEachChangedPair(const CorpusTuple& tuple,
                        const std::function<void(const ChangedPair&)>& visit) {
  for (const auto& [from_key, from] : tuple.variants) {
    for (const auto& [to_key, to] : tuple.variants) {
      const bool speaker_differs = from_key.speaker != to_key.speaker;
      const bool listener_differs = from_key.listener != to_key.listener;
      if (speaker_differs == listener_differs) continue;
      const Person person = speaker_differs ? Person::kFirst : Person::kSecond;
      const GenderMark mark{person, to_key.GenderFor(person)};
      for (std::size_t i = 0; i < from.tokens.size(); ++i) {
        const std::string& src = from.tokens[i].surface;
        const std::string& dst = to.tokens[i].surface;
        if (src == dst) continue;
        const std::string_view prev =
            i == 0 ? kSentenceBoundary
                   : std::string_view(from.tokens[i - 1].surface);
        visit({prev, src, dst, mark});
      }
    }
  }
}

TokenLabel VariantLabel(const TokenLabel& base_label, VariantKey key) {
  TokenLabel out;
  for (const GenderMark& m : base_label.marks()) {
    out.Set({m.person, key.GenderFor(m.person)});
  }
  return out;
}

}  // namespace ginaz
