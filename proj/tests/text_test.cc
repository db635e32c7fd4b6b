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

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "ginaz/errors.h"
#include "ginaz/text.h"

namespace ginaz {
namespace {

std::vector<std::string> Surfaces(std::string_view text) {
  return Tokenize(text).Surfaces();
}

TEST_CASE("normalize leaves empty and NFC text alone") {
  CHECK(Normalize("") == "");
  const std::string nfc = "أنا طبيب وأنت ممرضة";
  CHECK(Normalize(nfc) == nfc);
  // Tatweel, diacritics and alef variants are not NFC changes.
  const std::string kept = "إِنَّ ٱلـعلم أم آ";
  CHECK(Normalize(kept) == Normalize(Normalize(kept)));
}

TEST_CASE("normalize composes decomposed Arabic") {
  // Expected code points from Python's unicodedata.normalize("NFC", ...).
  CHECK(Normalize("\u0627\u0653") == "\u0622");  // alef + maddah above
  CHECK(Normalize("\u0627\u0654") == "\u0623");  // alef + hamza above
  CHECK(Normalize("\u064A\u0654") == "\u0626");  // yeh + hamza above
  CHECK(Normalize("e\u0301") == "\u00E9");
  // Arabic combining marks are reordered canonically: shadda (ccc 33) after
  // fatha (ccc 30).
  CHECK(Normalize("\u0628\u0651\u064E") == "\u0628\u064E\u0651");
}

TEST_CASE("normalize rejects invalid UTF-8") {
  CHECK_THROWS_AS(Normalize("\xC3\x28"), DecodeError);
  CHECK_THROWS_AS(Normalize("abc\xFF"), DecodeError);
  CHECK_THROWS_AS(Tokenize("\xE2\x82"), DecodeError);
}

TEST_CASE("tokenize splits on whitespace and detaches punctuation") {
  CHECK(Surfaces("أنا طبيب وأنت ممرضة") ==
        std::vector<std::string>{"أنا", "طبيب", "وأنت", "ممرضة"});
  CHECK(Tokenize("").tokens.empty());
  CHECK(Surfaces("مرحبا.") == std::vector<std::string>{"مرحبا", "."});
  CHECK(Surfaces("هل أنت مستعد؟") ==
        std::vector<std::string>{"هل", "أنت", "مستعد", "؟"});
  CHECK(Surfaces("نعم، شكرا!") ==
        std::vector<std::string>{"نعم", "،", "شكرا", "!"});
  CHECK(Surfaces("  \t\n ").empty());
}

TEST_CASE("token offsets point into the raw text") {
  const Sentence s = Tokenize("أنا  طبيب.");
  REQUIRE(s.tokens.size() == 3);
  for (const Token& t : s.tokens) {
    CHECK(s.raw.substr(t.start, t.end - t.start) == t.surface);
  }
  CHECK(s.tokens[0].start == 0);
  CHECK(s.tokens[1].start == s.tokens[0].end + 2);
  CHECK(s.tokens[2].start == s.tokens[1].end);
}

TEST_CASE("detokenize splices rewritten surfaces") {
  Sentence s = Tokenize("أنا طبيب وأنت ممرضة");
  s.tokens[1].surface = "طبيبة";
  CHECK(Detokenize(s) == "أنا طبيبة وأنت ممرضة");
}

TEST_CASE("detokenize keeps the original gaps") {
  const std::string raw = "أنا  طبيب\tوأنت ممرضة ";
  Sentence s = Tokenize(raw);
  CHECK(Detokenize(s) == raw);
  s.tokens[1].surface = "طبيبة";
  CHECK(Detokenize(s) == "أنا  طبيبة\tوأنت ممرضة ");
}

TEST_CASE("detokenize rejects inconsistent offsets") {
  Sentence s = Tokenize("a b c");
  std::swap(s.tokens[0], s.tokens[1]);
  CHECK_THROWS_AS(Detokenize(s), StructuralError);
  Sentence t = Tokenize("a b");
  t.tokens[1].end = 99;
  CHECK_THROWS_AS(Detokenize(t), StructuralError);
}

TEST_CASE("property: tokenize round trips and offsets partition non-gap bytes") {
  // Alphabet mixes Arabic letters and marks, Latin, digits, punctuation and
  // several kinds of whitespace.
  const std::vector<std::string> alphabet = {
      "\u0627", "\u0628", "\u0629", "\u064A", "\u064E", "\u0651",
      "\u0640", "a",      "Z",      "7",      ".",      "\u060C",
      "\u061F", "!",      "(",      " ",      "  ",     "\t",
      "\n",     "\u00A0", "\u2003", "e\u0301"};
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> length(0, 24);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string raw;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) raw += alphabet[pick(rng)];
    const Sentence s = Tokenize(raw);
    REQUIRE(Detokenize(s) == raw);
    std::size_t cursor = 0;
    for (const Token& t : s.tokens) {
      REQUIRE(!t.surface.empty());
      REQUIRE(t.start >= cursor);
      REQUIRE(t.end > t.start);
      REQUIRE(raw.substr(t.start, t.end - t.start) == t.surface);
      cursor = t.end;
    }
    REQUIRE(Normalize(Normalize(raw)) == Normalize(raw));
  }
}

TEST_CASE("labels parse and print every class") {
  const std::vector<std::string> codes = {"N",     "1M",    "1F",
                                          "2M",    "2F",    "1M+2M",
                                          "1M+2F", "1F+2M", "1F+2F"};
  REQUIRE(AllLabels().size() == codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    CHECK(TokenLabel::Parse(codes[i]).Code() == codes[i]);
    CHECK(AllLabels()[i].Code() == codes[i]);
  }
  CHECK(TokenLabel::Parse("N").empty());
  CHECK(TokenLabel::Parse("1F+2M").size() == 2);
  CHECK(TokenLabel::Parse("1F+2M").MarkFor(Person::kSecond) == Gender::kMasculine);
  for (const char* bad : {"", "3M", "1X", "2M+1F", "1M+1F", "1M+", "n"}) {
    CHECK_THROWS_AS(TokenLabel::Parse(bad), std::invalid_argument);
  }
}

TEST_CASE("gender order is M before F") {
  CHECK(Gender::kMasculine < Gender::kFeminine);
  CHECK(kGenders[0] == Gender::kMasculine);
  CHECK(Opposite(Gender::kMasculine) == Gender::kFeminine);
}

}  // namespace
}  // namespace ginaz
