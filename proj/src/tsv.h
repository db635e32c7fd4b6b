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
// Field helpers shared by the bundle component readers. Malformed fields raise
// BundleError(kFormat).

#ifndef GINAZ_SRC_TSV_H_
#define GINAZ_SRC_TSV_H_

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ginaz/errors.h"
#include "ginaz/text.h"

namespace ginaz::tsv {

inline std::vector<std::string_view> Split(std::string_view line,
                                           char sep = '\t') {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

inline BundleError FormatError(const std::string& what) {
  return BundleError(BundleError::Kind::kFormat, what);
}

inline Person ParsePerson(std::string_view s) {
  if (s == "1") return Person::kFirst;
  if (s == "2") return Person::kSecond;
  throw FormatError("bad person field '" + std::string(s) + "'");
}

inline Gender ParseGender(std::string_view s) {
  if (s == "M") return Gender::kMasculine;
  if (s == "F") return Gender::kFeminine;
  throw FormatError("bad gender field '" + std::string(s) + "'");
}

inline std::uint64_t ParseUnsigned(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw FormatError("bad integer field '" + std::string(s) + "'");
  }
  return v;
}

inline std::uint32_t ParseCount(std::string_view s) {
  const auto v = ParseUnsigned(s);
  if (v == 0 || v > UINT32_MAX) {
    throw FormatError("count out of range '" + std::string(s) + "'");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace ginaz::tsv

#endif  // GINAZ_SRC_TSV_H_
