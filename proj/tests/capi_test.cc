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

// Exercises libginaz through its C header only.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include <doctest.h>

#include "ginaz/ginaz.h"

namespace {

const std::string kData = GINAZ_DATA_DIR;

std::string Take(char* s) {
  std::string out = s ? s : "";
  ginaz_string_free(s);
  return out;
}

class TrainedModel {
 public:
  TrainedModel()
      : dir_(std::filesystem::temp_directory_path() /
             ("ginaz_capi_" + std::to_string(::getpid()))) {
    ::unsetenv("GINAZ_MT_URL");
    std::filesystem::remove_all(dir_);
    REQUIRE(ginaz_train((kData + "/corpus.tsv").c_str(), (kData + "/rules.tsv").c_str(),
                        dir_.c_str()) == GINAZ_OK);
    REQUIRE(ginaz_model_load(dir_.c_str(), &model_) == GINAZ_OK);
  }
  ~TrainedModel() {
    ginaz_model_free(model_);
    std::filesystem::remove_all(dir_);
  }

 protected:
  std::filesystem::path dir_;
  ginaz_model* model_ = nullptr;
};

TEST_CASE("version string") { CHECK(std::string(ginaz_version()) == "1.0.0"); }

TEST_CASE_FIXTURE(TrainedModel, "rewrite as text") {
  char* out = nullptr;
  REQUIRE(ginaz_rewrite(model_, "أنا طبيب وأنت ممرضة", "f", "m", GINAZ_FORMAT_TEXT,
                        &out) == GINAZ_OK);
  const std::string text = Take(out);
  CHECK(text.find("[identified]\n") == 0);
  CHECK(text.find("طبيب/1M") != std::string::npos);
  CHECK(text.find("ممرضة/2F") != std::string::npos);
  CHECK(text.find("[speaker=f listener=m]\nأنا طبيبة وأنت ممرض\n") != std::string::npos);
  CHECK(std::string(ginaz_last_error()).empty());
}

TEST_CASE_FIXTURE(TrainedModel, "rewrite as JSON with both selections") {
  char* out = nullptr;
  REQUIRE(ginaz_rewrite(model_, "أنا طبيب وأنت ممرضة", "m,f", "m,f", GINAZ_FORMAT_JSON,
                        &out) == GINAZ_OK);
  const std::string json = Take(out);
  CHECK(json.find("\"modelVersion\"") != std::string::npos);
  CHECK(json.find(ginaz_model_version(model_)) != std::string::npos);
  CHECK(json.find("أنا طبيبة وأنت ممرضة") != std::string::npos);
  CHECK(json.find("أنا طبيب وأنت ممرض\"") != std::string::npos);
}

TEST_CASE_FIXTURE(TrainedModel, "rewrite errors map to status codes") {
  char* out = nullptr;
  CHECK(ginaz_rewrite(model_, "x", "q", nullptr, GINAZ_FORMAT_TEXT, &out) ==
        GINAZ_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(std::string(ginaz_last_error()).find("speaker") != std::string::npos);
  CHECK(ginaz_rewrite(model_, "\xC3\x28", "f", nullptr, GINAZ_FORMAT_TEXT, &out) ==
        GINAZ_ERR_DECODE);
  CHECK(ginaz_rewrite(model_, "quantum pancake", "f", nullptr, GINAZ_FORMAT_TEXT,
                      &out) == GINAZ_ERR_UNTRANSLATABLE);
  CHECK(ginaz_rewrite(nullptr, "x", "f", nullptr, GINAZ_FORMAT_TEXT, &out) ==
        GINAZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE_FIXTURE(TrainedModel, "in-process request handling") {
  int status = 0;
  char* body = nullptr;
  REQUIRE(ginaz_handle_request(model_, "GET", "/api/health", nullptr, &status, &body) ==
          GINAZ_OK);
  CHECK(status == 200);
  CHECK(Take(body).find("\"ok\"") != std::string::npos);
  REQUIRE(ginaz_handle_request(model_, "POST", "/api/rewrite",
                               R"({"text":"أنا طبيب","speaker":["f"]})", &status,
                               &body) == GINAZ_OK);
  CHECK(status == 200);
  CHECK(Take(body).find("أنا طبيبة") != std::string::npos);
  REQUIRE(ginaz_handle_request(model_, "POST", "/api/rewrite", "{", &status, &body) ==
          GINAZ_OK);
  CHECK(status == 400);
  Take(body);
  REQUIRE(ginaz_handle_request(model_, "GET", "/elsewhere", nullptr, &status, &body) ==
          GINAZ_OK);
  CHECK(status == 404);
  Take(body);
}

TEST_CASE_FIXTURE(TrainedModel, "evaluation output") {
  char* tsv = nullptr;
  REQUIRE(ginaz_eval(model_, (kData + "/corpus.tsv").c_str(), "train", &tsv) == GINAZ_OK);
  const std::string metrics = Take(tsv);
  CHECK(metrics.find("f0.5\ttrain\t") == 0);
  CHECK(metrics.find("bleu\ttrain\t") != std::string::npos);
  CHECK(ginaz_eval(model_, "/no/such/corpus.tsv", "x", &tsv) == GINAZ_ERR_PARSE);
}

TEST_CASE("load and train failures") {
  ginaz_model* model = nullptr;
  CHECK(ginaz_model_load("/no/such/model", &model) == GINAZ_ERR_BUNDLE);
  CHECK(model == nullptr);
  CHECK(!std::string(ginaz_last_error()).empty());
  CHECK(ginaz_model_load(nullptr, &model) == GINAZ_ERR_INVALID_ARGUMENT);

  const auto bad = std::filesystem::temp_directory_path() /
                   ("ginaz_capi_bad_" + std::to_string(::getpid()) + ".tsv");
  std::ofstream(bad) << "#id\tx\nB\tأنا\nL\t9Z\n";
  CHECK(ginaz_train(bad.c_str(), (kData + "/rules.tsv").c_str(), "/tmp/unused") ==
        GINAZ_ERR_PARSE);
  CHECK(std::string(ginaz_last_error()).find(":3") != std::string::npos);
  std::filesystem::remove(bad);
  ginaz_model_free(nullptr);
  CHECK(std::string(ginaz_model_version(nullptr)).empty());
}

}  // namespace
