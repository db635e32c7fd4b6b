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

#include "ginaz/char_transducer.h"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <tuple>

#include "ginaz/errors.h"
#include "tsv.h"

namespace ginaz {

namespace {

bool RuleOrder(const SuffixRule& a, const SuffixRule& b) {
  const auto la = CodePointCount(a.strip);
  const auto lb = CodePointCount(b.strip);
  if (la != lb) return la > lb;
  if (a.weight != b.weight) return a.weight > b.weight;
  return std::tie(a.strip, a.add, a.person, a.gender) <
         std::tie(b.strip, b.add, b.person, b.gender);
}

}  // namespace

CharTransducer::CharTransducer(std::vector<SuffixRule> rules,
                               std::size_t max_suffix_len,
                               std::size_t dropped_pairs)
    : rules_(std::move(rules)),
      max_suffix_len_(max_suffix_len),
      dropped_pairs_(dropped_pairs) {
  std::sort(rules_.begin(), rules_.end(), RuleOrder);
}

SuffixRule AlignPair(std::string_view source, std::string_view target,
                     GenderMark mark) {
  const auto a = CodePoints(source);
  const auto b = CodePoints(target);
  std::size_t lcp = 0;
  while (lcp < a.size() && lcp < b.size() && a[lcp] == b[lcp]) ++lcp;
  SuffixRule rule{{}, {}, mark.person, mark.gender, 1};
  for (std::size_t i = lcp; i < a.size(); ++i) rule.strip += a[i];
  for (std::size_t i = lcp; i < b.size(); ++i) rule.add += b[i];
  return rule;
}

CharTransducer InduceCharRules(const std::vector<CorpusTuple>& tuples,
                               std::size_t max_suffix_len) {
  std::map<std::tuple<std::string, std::string, Person, Gender>, std::uint32_t>
      weights;
  std::size_t dropped = 0;
  for (const CorpusTuple& t : tuples) {
    ForEachChangedPair(t, [&](const ChangedPair& p) {
      SuffixRule r = AlignPair(p.source, p.target, p.mark);
      if (CodePointCount(r.strip) > max_suffix_len &&
          CodePointCount(r.add) > max_suffix_len) {
        ++dropped;
        return;
      }
      ++weights[{r.strip, r.add, r.person, r.gender}];
    });
  }
  std::vector<SuffixRule> rules;
  for (const auto& [key, w] : weights) {
    const auto& [strip, add, person, gender] = key;
    rules.push_back({strip, add, person, gender, w});
  }
  return CharTransducer(std::move(rules), max_suffix_len, dropped);
}

std::vector<std::string> Transduce(std::string_view token, GenderMark target,
                                   const CharTransducer& transducer) {
  std::vector<std::string> out;
  for (const SuffixRule& r : transducer.rules()) {
    if (r.person != target.person || r.gender != target.gender) continue;
    if (token.size() <= r.strip.size() || !token.ends_with(r.strip)) continue;
    std::string candidate(token.substr(0, token.size() - r.strip.size()));
    candidate += r.add;
    if (candidate == token) continue;
    if (std::find(out.begin(), out.end(), candidate) != out.end()) continue;
    out.push_back(std::move(candidate));
    if (out.size() == CharTransducer::kCandidateCap) break;
  }
  return out;
}

void CharTransducer::Save(std::ostream& out) const {
  out << "max_suffix_len\t" << max_suffix_len_ << '\n';
  out << "dropped_pairs\t" << dropped_pairs_ << '\n';
  for (const SuffixRule& r : rules_) {
    out << "R\t" << r.strip << '\t' << r.add << '\t' << PersonNumber(r.person)
        << '\t' << GenderCode(r.gender) << '\t' << r.weight << '\n';
  }
}

CharTransducer CharTransducer::Load(std::istream& in) {
  std::vector<SuffixRule> rules;
  std::size_t max_len = kDefaultMaxSuffixLen;
  std::size_t dropped = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = tsv::Split(line);
    if (f[0] == "max_suffix_len" && f.size() == 2) {
      max_len = tsv::ParseUnsigned(f[1]);
    } else if (f[0] == "dropped_pairs" && f.size() == 2) {
      dropped = tsv::ParseUnsigned(f[1]);
    } else if (f[0] == "R" && f.size() == 6) {
      rules.push_back({std::string(f[1]), std::string(f[2]),
                       tsv::ParsePerson(f[3]), tsv::ParseGender(f[4]),
                       tsv::ParseCount(f[5])});
    } else {
      throw tsv::FormatError("malformed transducer record");
    }
  }
  return CharTransducer(std::move(rules), max_len, dropped);
}

}  // namespace ginaz
