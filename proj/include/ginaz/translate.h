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
// Optional English to Arabic front stage. The offline phrase-table backend is
// the default; an HTTP backend is used when GINAZ_MT_URL is set.

#ifndef GINAZ_TRANSLATE_H_
#define GINAZ_TRANSLATE_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace ginaz {

enum class Language { kArabic, kEnglish, kMixed };

const char* LanguageName(Language language);

// Counts letters by script. Arabic or English when that script has at least
// 80% of the letters, Mixed otherwise. Text without letters is Arabic (it
// never needs translating).
Language DetectLanguage(std::string_view text);

class Translator {
 public:
  virtual ~Translator() = default;

  // Throws PreconditionError unless `text` is English, UntranslatableError
  // when the backend has no translation and TransportError on network
  // failure. The result is NFC.
  std::string Translate(std::string_view text) const;

  virtual std::string_view name() const = 0;

 protected:
  virtual std::string DoTranslate(std::string_view english) const = 0;
};

// Exact phrase-table lookup after trimming. A sentence ending in . ! or ? is
// also tried without it, and the Arabic form of the mark is put back.
class StubTranslator : public Translator {
 public:
  StubTranslator();  // built-in table
  explicit StubTranslator(std::map<std::string, std::string, std::less<>> table);

  std::string_view name() const override { return "stub"; }

 protected:
  std::string DoTranslate(std::string_view english) const override;

 private:
  std::map<std::string, std::string, std::less<>> table_;
};

struct HttpTranslatorConfig {
  std::string url;  // e.g. http://localhost:5000/translate
  std::string key;  // optional
  int timeout_ms = 5000;
};

// POSTs {"q", "source": "en", "target": "ar"} (plus "api_key" when a key is
// configured) and reads "translatedText" from the response, also accepting
// the {"data": {"translations": [{"translatedText"}]}} shape.
class HttpTranslator : public Translator {
 public:
  // Throws PreconditionError on a malformed URL or non-positive timeout.
  explicit HttpTranslator(HttpTranslatorConfig config);

  std::string_view name() const override { return "http"; }

 protected:
  std::string DoTranslate(std::string_view english) const override;

 private:
  HttpTranslatorConfig config_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;
};

// HttpTranslator when GINAZ_MT_URL is set (key from GINAZ_MT_KEY, timeout
// from GINAZ_MT_TIMEOUT_MS), StubTranslator otherwise.
std::unique_ptr<Translator> MakeTranslatorFromEnv();

}  // namespace ginaz

#endif  // GINAZ_TRANSLATE_H_
