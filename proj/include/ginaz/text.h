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
// Shared domain vocabulary (genders, persons, token labels, sentences) and the
// text primitives every other module builds on. All strings are UTF-8.

#ifndef GINAZ_TEXT_H_
#define GINAZ_TEXT_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ginaz {

// Declaration order is the iteration order: M < F.
enum class Gender : std::uint8_t { kMasculine = 0, kFeminine = 1 };
enum class Person : std::uint8_t { kFirst = 0, kSecond = 1 };

inline constexpr std::array<Gender, 2> kGenders = {Gender::kMasculine,
                                                   Gender::kFeminine};
inline constexpr std::array<Person, 2> kPersons = {Person::kFirst,
                                                   Person::kSecond};

inline Gender Opposite(Gender g) {
  return g == Gender::kMasculine ? Gender::kFeminine : Gender::kMasculine;
}

// 'M' / 'F'.
char GenderCode(Gender g);
// 1 / 2.
int PersonNumber(Person p);

struct GenderMark {
  Person person;
  Gender gender;

  auto operator<=>(const GenderMark&) const = default;
};

// The gender marks carried by one token: at most one per person. An empty
// label is "N" (no gender marking).
class TokenLabel {
 public:
  TokenLabel() = default;

  // Parses N, 1M, 1F, 2M, 2F, or a dual code such as 1M+2F. Throws
  // std::invalid_argument on anything else.
  static TokenLabel Parse(std::string_view code);

  std::string Code() const;

  bool empty() const { return !marks_[0] && !marks_[1]; }
  std::size_t size() const {
    return static_cast<std::size_t>(marks_[0].has_value()) +
           static_cast<std::size_t>(marks_[1].has_value());
  }

  std::optional<Gender> MarkFor(Person p) const {
    return marks_[static_cast<int>(p)];
  }
  // Replaces any existing mark for `mark.person`.
  void Set(GenderMark mark) { marks_[static_cast<int>(mark.person)] = mark.gender; }
  std::vector<GenderMark> marks() const;

  bool operator==(const TokenLabel&) const = default;
  auto operator<=>(const TokenLabel&) const = default;

 private:
  std::array<std::optional<Gender>, 2> marks_;
};

// All nine label classes, in a fixed order (N first).
const std::vector<TokenLabel>& AllLabels();

// `start`/`end` are byte offsets into the owning sentence's raw text. After a
// rewrite the surface may differ from raw[start, end) while offsets still
// point at the source token.
struct Token {
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string raw;
  std::vector<Token> tokens;

  std::vector<std::string> Surfaces() const;
  bool operator==(const Sentence&) const = default;
};

// Speaker and listener target gender selections; either may be empty.
struct TargetSpec {
  std::set<Gender> speaker;
  std::set<Gender> listener;
};

// NFC normalization. Throws DecodeError on invalid UTF-8.
std::string Normalize(std::string_view text);

// Throws DecodeError unless `text` is well-formed UTF-8.
void ValidateUtf8(std::string_view text);

// Splits on Unicode whitespace and detaches every punctuation code point as
// its own token, recording byte offsets.
Sentence Tokenize(std::string_view text);

// Rebuilds text from token surfaces and the raw inter-token gaps. Throws
// StructuralError when offsets are out of order or out of range.
std::string Detokenize(const Sentence& sentence);

// Copy of `base` with token surfaces replaced; offsets are kept.
Sentence WithSurfaces(const Sentence& base,
                      std::span<const std::string> surfaces);

// Splits into code points, each as its own UTF-8 string.
std::vector<std::string> CodePoints(std::string_view text);
std::size_t CodePointCount(std::string_view text);

}  // namespace ginaz

#endif  // GINAZ_TEXT_H_
