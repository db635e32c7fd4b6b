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

#include "ginaz/translate.h"

#include <cstdint>
#include <cstdlib>

#include <httplib.h>
#include <json.hpp>
#include <unicode/uchar.h>
#include <unicode/uscript.h>
#include <unicode/utf8.h>

#include "ginaz/errors.h"
#include "ginaz/text.h"

namespace ginaz {

namespace {

constexpr double kDominantShare = 0.8;

std::string_view TrimAscii(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::map<std::string, std::string, std::less<>> BuiltinTable() {
  return {
      {"I am a doctor and you are a nurse", "أنا طبيب وأنت ممرضة"},
      {"I am a writer and you are a teacher", "أنا كاتب وأنت معلم"},
      {"I am tired today", "أنا متعب اليوم"},
      {"I am happy today", "أنا سعيد اليوم"},
      {"I am a programmer", "أنا مبرمج"},
      {"Are you a programmer", "هل أنت مبرمج"},
      {"You are very ready", "أنت جاهز جدا"},
      {"Hello", "مرحبا"},
  };
}

}  // namespace

const char* LanguageName(Language language) {
  switch (language) {
    case Language::kArabic:
      return "arabic";
    case Language::kEnglish:
      return "english";
    case Language::kMixed:
      return "mixed";
  }
  return "unknown";
}

Language DetectLanguage(std::string_view text) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::size_t letters = 0;
  std::size_t arabic = 0;
  std::size_t latin = 0;
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0 || !u_isalpha(c)) continue;
    ++letters;
    UErrorCode status = U_ZERO_ERROR;
    const UScriptCode script = uscript_getScript(c, &status);
    if (U_FAILURE(status)) continue;
    if (script == USCRIPT_ARABIC) ++arabic;
    if (script == USCRIPT_LATIN) ++latin;
  }
  if (letters == 0) return Language::kArabic;
  const double n = static_cast<double>(letters);
  if (static_cast<double>(arabic) / n >= kDominantShare) return Language::kArabic;
  if (static_cast<double>(latin) / n >= kDominantShare) return Language::kEnglish;
  return Language::kMixed;
}

std::string Translator::Translate(std::string_view text) const {
  if (DetectLanguage(text) != Language::kEnglish) {
    throw PreconditionError("only English text is sent for translation");
  }
  return Normalize(DoTranslate(text));
}

StubTranslator::StubTranslator() : table_(BuiltinTable()) {}

StubTranslator::StubTranslator(
    std::map<std::string, std::string, std::less<>> table)
    : table_(std::move(table)) {}

std::string StubTranslator::DoTranslate(std::string_view english) const {
  const std::string_view text = TrimAscii(english);
  if (auto it = table_.find(text); it != table_.end()) return it->second;
  if (!text.empty()) {
    const char mark = text.back();
    const char* arabic_mark = mark == '.'   ? "."
                              : mark == '!' ? "!"
                              : mark == '?' ? "؟"
                                            : nullptr;
    if (arabic_mark) {
      const std::string_view stem = TrimAscii(text.substr(0, text.size() - 1));
      if (auto it = table_.find(stem); it != table_.end()) {
        return it->second + " " + arabic_mark;
      }
    }
  }
  throw UntranslatableError("no translation for '" + std::string(text) + "'");
}

HttpTranslator::HttpTranslator(HttpTranslatorConfig config)
    : config_(std::move(config)) {
  if (config_.timeout_ms <= 0) {
    throw PreconditionError("translation timeout must be positive");
  }
  const auto scheme_end = config_.url.find("://");
  if (scheme_end == std::string::npos) {
    throw PreconditionError("translation URL needs a scheme: " + config_.url);
  }
  const auto scheme = config_.url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw PreconditionError("unsupported translation URL scheme: " + scheme);
  }
  const auto path_start = config_.url.find('/', scheme_end + 3);
  origin_ = config_.url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : config_.url.substr(path_start);
  if (origin_.size() <= scheme_end + 3) {
    throw PreconditionError("translation URL has no host: " + config_.url);
  }
}

std::string HttpTranslator::DoTranslate(std::string_view english) const {
  httplib::Client client(origin_);
  const auto timeout = std::chrono::milliseconds(config_.timeout_ms);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  nlohmann::json request = {
      {"q", std::string(english)}, {"source", "en"}, {"target", "ar"}};
  if (!config_.key.empty()) request["api_key"] = config_.key;
  const auto response =
      client.Post(path_, request.dump(), "application/json");
  if (!response) {
    throw TransportError("translation request failed: " +
                         httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw TransportError("translation backend returned HTTP " +
                         std::to_string(response->status));
  }
  const auto body = nlohmann::json::parse(response->body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) {
    throw TransportError("translation backend returned malformed JSON");
  }
  if (body.contains("translatedText") && body["translatedText"].is_string()) {
    return body["translatedText"].get<std::string>();
  }
  const auto nested = nlohmann::json::json_pointer("/data/translations/0/translatedText");
  if (body.contains(nested) && body[nested].is_string()) {
    return body[nested].get<std::string>();
  }
  throw TransportError("translation response has no translatedText");
}

std::unique_ptr<Translator> MakeTranslatorFromEnv() {
  const char* url = std::getenv("GINAZ_MT_URL");
  if (url == nullptr || *url == '\0') return std::make_unique<StubTranslator>();
  HttpTranslatorConfig config;
  config.url = url;
  if (const char* key = std::getenv("GINAZ_MT_KEY")) config.key = key;
  if (const char* ms = std::getenv("GINAZ_MT_TIMEOUT_MS")) {
    config.timeout_ms = std::atoi(ms);
  }
  return std::make_unique<HttpTranslator>(std::move(config));
}

}  // namespace ginaz
