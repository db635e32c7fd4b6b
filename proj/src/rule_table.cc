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

#include "ginaz/rule_table.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "ginaz/errors.h"
#include "tsv.h"

namespace ginaz {

namespace {

std::string Affix(std::string_view field) {
  if (field == "-") return {};
  return std::string(field);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

}  // namespace

RuleTable RuleTable::Parse(std::string_view text,
                           const std::string& source_name) {
  RuleTable table;
  std::set<std::string, std::less<>> ids;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = Trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++number;
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& what) {
      return ParseError(source_name, number, what);
    };
    const auto f = tsv::Split(line);
    if (f.size() != 7 && f.size() != 8) {
      throw fail("expected 7 or 8 TAB-separated fields, got " +
                 std::to_string(f.size()));
    }
    MorphRule rule;
    rule.id = std::string(f[0]);
    if (rule.id.empty()) throw fail("empty rule id");
    if (!ids.insert(rule.id).second) throw fail("duplicate rule id " + rule.id);
    if (f[1] == "1") {
      rule.first_person = true;
    } else if (f[1] == "2") {
      rule.second_person = true;
    } else if (f[1] == "12") {
      rule.first_person = rule.second_person = true;
    } else {
      throw fail("persons must be 1, 2 or 12");
    }
    try {
      rule.from = tsv::ParseGender(f[2]);
      rule.to = tsv::ParseGender(f[3]);
    } catch (const BundleError&) {
      throw fail("gender must be M or F");
    }
    if (rule.from == rule.to) throw fail("rule does not change gender");
    try {
      ValidateUtf8(f[4]);
      ValidateUtf8(f[5]);
      rule.strip = Normalize(Affix(f[4]));
      rule.add = Normalize(Affix(f[5]));
      if (f.size() == 8) rule.prefix = Normalize(Affix(f[7]));
    } catch (const DecodeError& e) {
      throw fail(e.what());
    }
    if (rule.strip == rule.add) throw fail("strip and add are identical");
    const std::string_view prio = f[6];
    auto res = std::from_chars(prio.data(), prio.data() + prio.size(),
                               rule.priority);
    if (res.ec != std::errc() || res.ptr != prio.data() + prio.size() ||
        prio.empty()) {
      throw fail("priority must be an integer");
    }
    table.rules_.push_back(std::move(rule));
  }
  std::stable_sort(table.rules_.begin(), table.rules_.end(),
                   [](const MorphRule& a, const MorphRule& b) {
                     if (a.priority != b.priority) return a.priority < b.priority;
                     return a.id < b.id;
                   });
  return table;
}

RuleTable RuleTable::ParseFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open rule table");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path);
}

void RuleTable::Save(std::ostream& out) const {
  auto affix = [](const std::string& s) { return s.empty() ? "-" : s; };
  for (const MorphRule& r : rules_) {
    out << r.id << '\t'
        << (r.first_person && r.second_person ? "12"
            : r.first_person                  ? "1"
                                              : "2")
        << '\t' << GenderCode(r.from) << '\t' << GenderCode(r.to) << '\t'
        << affix(r.strip) << '\t' << affix(r.add) << '\t' << r.priority << '\t'
        << affix(r.prefix) << '\n';
  }
}

std::vector<std::string> MorphRewrite(std::string_view token, GenderMark target,
                                      const RuleTable& table) {
  std::vector<std::string> out;
  for (const MorphRule& r : table.rules()) {
    if (!r.AppliesTo(target.person) || r.to != target.gender) continue;
    if (!token.ends_with(r.strip) || !token.starts_with(r.prefix)) continue;
    if (token.size() <= r.strip.size() ||
        token.size() < r.strip.size() + r.prefix.size()) {
      continue;
    }
    std::string candidate(token.substr(0, token.size() - r.strip.size()));
    candidate += r.add;
    if (candidate == token) continue;
    if (std::find(out.begin(), out.end(), candidate) != out.end()) continue;
    out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace ginaz
