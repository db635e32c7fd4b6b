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

#include "ginaz/text.h"

#include <stdexcept>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "ginaz/errors.h"

namespace ginaz {

char GenderCode(Gender g) { return g == Gender::kMasculine ? 'M' : 'F'; }

int PersonNumber(Person p) { return p == Person::kFirst ? 1 : 2; }

namespace {

bool ParseMark(std::string_view code, GenderMark* mark) {
  if (code.size() != 2) return false;
  if (code[0] == '1') {
    mark->person = Person::kFirst;
  } else if (code[0] == '2') {
    mark->person = Person::kSecond;
  } else {
    return false;
  }
  if (code[1] == 'M') {
    mark->gender = Gender::kMasculine;
  } else if (code[1] == 'F') {
    mark->gender = Gender::kFeminine;
  } else {
    return false;
  }
  return true;
}

}  // namespace

TokenLabel TokenLabel::Parse(std::string_view code) {
  TokenLabel label;
  if (code == "N") return label;
  const auto plus = code.find('+');
  GenderMark first{};
  if (plus == std::string_view::npos) {
    if (!ParseMark(code, &first)) {
      throw std::invalid_argument("unknown label code '" + std::string(code) +
                                  "'");
    }
    label.Set(first);
    return label;
  }
  GenderMark second{};
  if (!ParseMark(code.substr(0, plus), &first) ||
      !ParseMark(code.substr(plus + 1), &second) ||
      first.person != Person::kFirst || second.person != Person::kSecond) {
    throw std::invalid_argument("unknown label code '" + std::string(code) +
                                "'");
  }
  label.Set(first);
  label.Set(second);
  return label;
}

std::string TokenLabel::Code() const {
  if (empty()) return "N";
  std::string out;
  for (Person p : kPersons) {
    if (auto g = MarkFor(p)) {
      if (!out.empty()) out += '+';
      out += static_cast<char>('0' + PersonNumber(p));
      out += GenderCode(*g);
    }
  }
  return out;
}

std::vector<GenderMark> TokenLabel::marks() const {
  std::vector<GenderMark> out;
  for (Person p : kPersons) {
    if (auto g = MarkFor(p)) out.push_back({p, *g});
  }
  return out;
}

const std::vector<TokenLabel>& AllLabels() {
  static const std::vector<TokenLabel> labels = [] {
    std::vector<TokenLabel> out;
    for (const char* code : {"N", "1M", "1F", "2M", "2F", "1M+2M", "1M+2F",
                             "1F+2M", "1F+2F"}) {
      out.push_back(TokenLabel::Parse(code));
    }
    return out;
  }();
  return labels;
}

std::vector<std::string> Sentence::Surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

void ValidateUtf8(std::string_view text) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    const std::int32_t at = i;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      throw DecodeError("invalid UTF-8 at byte " + std::to_string(at));
    }
  }
}

std::string Normalize(std::string_view text) {
  ValidateUtf8(text);
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  const icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<std::int32_t>(text.size())));
  if (nfc->isNormalized(in, status) && U_SUCCESS(status)) {
    return std::string(text);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString out = nfc->normalize(in, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  std::string result;
  out.toUTF8String(result);
  return result;
}

Sentence Tokenize(std::string_view text) {
  ValidateUtf8(text);
  Sentence sentence;
  sentence.raw = std::string(text);
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  std::int32_t word_start = -1;
  auto flush = [&](std::int32_t end) {
    if (word_start >= 0) {
      sentence.tokens.push_back(
          {std::string(text.substr(word_start, end - word_start)),
           static_cast<std::size_t>(word_start), static_cast<std::size_t>(end)});
      word_start = -1;
    }
  };
  while (i < length) {
    const std::int32_t at = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (u_isUWhiteSpace(c)) {
      flush(at);
    } else if (u_ispunct(c)) {
      flush(at);
      sentence.tokens.push_back({std::string(text.substr(at, i - at)),
                                 static_cast<std::size_t>(at),
                                 static_cast<std::size_t>(i)});
    } else if (word_start < 0) {
      word_start = at;
    }
  }
  flush(length);
  return sentence;
}

std::string Detokenize(const Sentence& sentence) {
  std::string out;
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& t = sentence.tokens[i];
    if (t.start < cursor || t.end < t.start || t.end > sentence.raw.size()) {
      throw StructuralError("token " + std::to_string(i) +
                            " has inconsistent offsets");
    }
    out.append(sentence.raw, cursor, t.start - cursor);
    out += t.surface;
    cursor = t.end;
  }
  out.append(sentence.raw, cursor, std::string::npos);
  return out;
}

Sentence WithSurfaces(const Sentence& base,
                      std::span<const std::string> surfaces) {
  if (surfaces.size() != base.tokens.size()) {
    throw StructuralError("surface count does not match token count");
  }
  Sentence out = base;
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    out.tokens[i].surface = surfaces[i];
  }
  return out;
}

std::vector<std::string> CodePoints(std::string_view text) {
  std::vector<std::string> out;
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  while (i < length) {
    const std::int32_t at = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) throw DecodeError("invalid UTF-8 at byte " + std::to_string(at));
    out.emplace_back(text.substr(at, i - at));
  }
  return out;
}

std::size_t CodePointCount(std::string_view text) {
  return CodePoints(text).size();
}

}  // namespace ginaz
