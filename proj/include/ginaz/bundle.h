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
// On-disk model directory. One file per component plus a `manifest`:
//
//   ginaz-bundle
//   format_version<TAB>1
//   file<TAB>lexicon.tsv<TAB><crc32, 8 hex digits><TAB><byte size>
//   ...
//
// The manifest lists lexicon.tsv, lm.tsv, transducer.tsv, identifier.bin and
// rules.tsv. Every listed file is checked against its checksum on load.

#ifndef GINAZ_BUNDLE_H_
#define GINAZ_BUNDLE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "ginaz/char_transducer.h"
#include "ginaz/corpus.h"
#include "ginaz/identifier.h"
#include "ginaz/language_model.h"
#include "ginaz/lexicon.h"
#include "ginaz/rule_table.h"

namespace ginaz {

inline constexpr int kBundleFormatVersion = 1;

struct ModelBundle {
  GenderLexicon lexicon;
  NGramLM lm;
  CharTransducer transducer;
  IdentifierModel identifier;
  RuleTable rules;
  int format_version = kBundleFormatVersion;
  // "1-<crc32 of manifest>"; set by save/load.
  std::string version_tag;
};

// Builds every trainable component from the tuples. Throws ModelError on an
// empty corpus.
ModelBundle BuildBundle(const std::vector<CorpusTuple>& tuples,
                        RuleTable rules);

void SaveBundle(ModelBundle& bundle, const std::filesystem::path& dir);
// Throws BundleError (missing component, version mismatch, checksum failure,
// malformed file).
ModelBundle LoadBundle(const std::filesystem::path& dir);

// Component readers, usable on their own.
GenderLexicon LoadLexiconFile(const std::filesystem::path& path);
NGramLM LoadLanguageModelFile(const std::filesystem::path& path);
CharTransducer LoadTransducerFile(const std::filesystem::path& path);
IdentifierModel LoadIdentifierFile(const std::filesystem::path& path);

}  // namespace ginaz

#endif  // GINAZ_BUNDLE_H_
