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

#include "ginaz/bundle.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <zlib.h>

#include "ginaz/errors.h"
#include "tsv.h"

namespace ginaz {

namespace fs = std::filesystem;

namespace {

constexpr const char* kManifest = "manifest";
constexpr const char* kManifestHeader = "ginaz-bundle";
constexpr const char* kLexiconFile = "lexicon.tsv";
constexpr const char* kLmFile = "lm.tsv";
constexpr const char* kTransducerFile = "transducer.tsv";
constexpr const char* kIdentifierFile = "identifier.bin";
constexpr const char* kRulesFile = "rules.tsv";

std::string Hex32(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof(buf), "%08x", v);
  return buf;
}

std::uint32_t Crc32(const std::string& bytes) {
  return static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()),
            static_cast<uInt>(bytes.size())));
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw BundleError(BundleError::Kind::kMissingComponent,
                      "missing bundle component " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteAll(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("cannot write " + path.string());
}

template <typename T>
std::string Serialize(const T& component) {
  std::ostringstream out(std::ios::binary);
  component.Save(out);
  return out.str();
}

template <typename T>
T ParseComponent(const std::string& bytes, const fs::path& path) {
  std::istringstream in(bytes, std::ios::binary);
  try {
    return T::Load(in);
  } catch (const BundleError& e) {
    throw BundleError(e.kind(), path.filename().string() + ": " + e.what());
  }
}

}  // namespace

ModelBundle BuildBundle(const std::vector<CorpusTuple>& tuples,
                        RuleTable rules) {
  if (tuples.empty()) throw ModelError("cannot build a bundle from no tuples");
  return ModelBundle{BuildLexicon(tuples),      BuildLanguageModel(tuples),
                     InduceCharRules(tuples),   TrainIdentifier(tuples),
                     std::move(rules),          kBundleFormatVersion,
                     std::string()};
}

void SaveBundle(ModelBundle& bundle, const fs::path& dir) {
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> files = {
      {kLexiconFile, Serialize(bundle.lexicon)},
      {kLmFile, Serialize(bundle.lm)},
      {kTransducerFile, Serialize(bundle.transducer)},
      {kIdentifierFile, Serialize(bundle.identifier)},
      {kRulesFile, Serialize(bundle.rules)},
  };
  std::ostringstream manifest;
  manifest << kManifestHeader << '\n'
           << "format_version\t" << bundle.format_version << '\n';
  for (const auto& [name, bytes] : files) {
    WriteAll(dir / name, bytes);
    manifest << "file\t" << name << '\t' << Hex32(Crc32(bytes)) << '\t'
             << bytes.size() << '\n';
  }
  WriteAll(dir / kManifest, manifest.str());
  bundle.version_tag = std::to_string(bundle.format_version) + "-" +
                       Hex32(Crc32(manifest.str()));
}

ModelBundle LoadBundle(const fs::path& dir) {
  const std::string manifest = ReadAll(dir / kManifest);
  std::istringstream in(manifest);
  std::string line;
  if (!std::getline(in, line) || line != kManifestHeader) {
    throw BundleError(BundleError::Kind::kFormat, "manifest: bad header");
  }
  int version = -1;
  std::vector<std::vector<std::string>> entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = tsv::Split(line);
    if (f[0] == "format_version" && f.size() == 2) {
      version = static_cast<int>(tsv::ParseUnsigned(f[1]));
    } else if (f[0] == "file" && f.size() == 4) {
      entries.push_back({std::string(f[1]), std::string(f[2]),
                         std::string(f[3])});
    } else {
      throw BundleError(BundleError::Kind::kFormat, "manifest: bad record");
    }
  }
  if (version != kBundleFormatVersion) {
    throw BundleError(BundleError::Kind::kVersionMismatch,
                      "bundle format version " + std::to_string(version) +
                          ", reader expects " +
                          std::to_string(kBundleFormatVersion));
  }
  std::map<std::string, std::string> files;
  for (const auto& entry : entries) {
    std::string bytes = ReadAll(dir / entry[0]);
    if (Hex32(Crc32(bytes)) != entry[1] ||
        std::to_string(bytes.size()) != entry[2]) {
      throw BundleError(BundleError::Kind::kChecksum,
                        "checksum mismatch for " + entry[0]);
    }
    files.emplace(entry[0], std::move(bytes));
  }
  for (const char* name : {kLexiconFile, kLmFile, kTransducerFile,
                           kIdentifierFile, kRulesFile}) {
    if (!files.count(name)) {
      throw BundleError(BundleError::Kind::kMissingComponent,
                        std::string("manifest does not list ") + name);
    }
  }
  RuleTable rules;
  try {
    rules = RuleTable::Parse(files.at(kRulesFile), kRulesFile);
  } catch (const ParseError& e) {
    throw BundleError(BundleError::Kind::kFormat, e.what());
  }
  ModelBundle bundle{
      ParseComponent<GenderLexicon>(files.at(kLexiconFile), kLexiconFile),
      ParseComponent<NGramLM>(files.at(kLmFile), kLmFile),
      ParseComponent<CharTransducer>(files.at(kTransducerFile), kTransducerFile),
      ParseComponent<IdentifierModel>(files.at(kIdentifierFile),
                                      kIdentifierFile),
      std::move(rules),
      version,
      std::to_string(version) + "-" + Hex32(Crc32(manifest))};
  return bundle;
}

GenderLexicon LoadLexiconFile(const fs::path& path) {
  return ParseComponent<GenderLexicon>(ReadAll(path), path);
}

NGramLM LoadLanguageModelFile(const fs::path& path) {
  return ParseComponent<NGramLM>(ReadAll(path), path);
}

CharTransducer LoadTransducerFile(const fs::path& path) {
  return ParseComponent<CharTransducer>(ReadAll(path), path);
}

IdentifierModel LoadIdentifierFile(const fs::path& path) {
  return ParseComponent<IdentifierModel>(ReadAll(path), path);
}

}  // namespace ginaz
