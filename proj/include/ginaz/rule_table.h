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
// Hand-written morphological gender rules, shipped as data.
//
// File format (UTF-8, TAB separated, '#' starts a comment line):
//
//   id  persons  from  to  strip  add  priority  [prefix]
//
// persons is 1, 2 or 12; from/to are M or F and must differ; strip, add and
// prefix use '-' (or an empty field) for the empty string. A rule applies to a
// word that ends with strip and starts with prefix, leaving a non-empty stem.
// Lower priority values are applied first; ties fall back to the id.

#ifndef GINAZ_RULE_TABLE_H_
#define GINAZ_RULE_TABLE_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ginaz/text.h"

namespace ginaz {

struct MorphRule {
  std::string id;
  bool first_person = false;
  bool second_person = false;
  Gender from;
  Gender to;
  std::string strip;
  std::string add;
  int priority = 0;
  std::string prefix;

  bool AppliesTo(Person p) const {
    return p == Person::kFirst ? first_person : second_person;
  }
  bool operator==(const MorphRule&) const = default;
};

class RuleTable {
 public:
  RuleTable() = default;

  // Throws ParseError for malformed lines or duplicate ids.
  static RuleTable Parse(std::string_view text, const std::string& source_name);
  static RuleTable ParseFile(const std::string& path);

  // Rules in application order.
  const std::vector<MorphRule>& rules() const { return rules_; }

  // Writes the table back in the file format above.
  void Save(std::ostream& out) const;

  bool operator==(const RuleTable&) const = default;

 private:
  std::vector<MorphRule> rules_;
};

// Applies every rule whose person scope covers target.person and whose
// direction ends in target.gender. Candidates are in rule order, without
// duplicates; the input word itself is never returned.
std::vector<std::string> MorphRewrite(std::string_view token, GenderMark target,
                                      const RuleTable& table);

}  // namespace ginaz

#endif  // GINAZ_RULE_TABLE_H_
