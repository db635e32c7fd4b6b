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
// Command line front end. Uses only the C API.
//
//   ginaz train   --corpus F --rules F --out DIR
//   ginaz rewrite --model DIR [--speaker m,f] [--listener m,f]
//                 (--text S | --stdin) [--json]
//   ginaz serve   --model DIR [--host H] [--port N] [--static DIR]
//   ginaz eval    --model DIR --test F [--split NAME]
//
// Exit status: 0 success, 1 usage error, 2 data or model error.

#include <cstdio>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "ginaz/ginaz.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

int Report(const char* what) {
  std::fprintf(stderr, "ginaz: %s: %s\n", what, ginaz_last_error());
  return kExitData;
}

// Owns a loaded model for the lifetime of one command.
class Model {
 public:
  ~Model() { ginaz_model_free(model_); }
  bool Load(const std::string& dir) {
    return ginaz_model_load(dir.c_str(), &model_) == GINAZ_OK;
  }
  const ginaz_model* get() const { return model_; }

 private:
  ginaz_model* model_ = nullptr;
};

int PrintOwned(char* text) {
  std::fputs(text, stdout);
  ginaz_string_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic speaker/listener gender rewriter"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ginaz_version());

  std::string corpus, rules, out_dir;
  auto* train = app.add_subcommand("train", "build a model directory");
  train->add_option("--corpus", corpus, "parallel gender corpus")->required();
  train->add_option("--rules", rules, "morphological rule table")->required();
  train->add_option("--out", out_dir, "output model directory")->required();

  std::string model_dir, speaker, listener, text;
  bool from_stdin = false;
  bool as_json = false;
  auto* rewrite = app.add_subcommand("rewrite", "rewrite text");
  rewrite->add_option("--model", model_dir, "model directory");
  rewrite->add_option("--speaker", speaker, "speaker targets, e.g. m,f");
  rewrite->add_option("--listener", listener, "listener targets, e.g. f");
  auto* text_opt = rewrite->add_option("--text", text, "input text");
  auto* stdin_opt = rewrite->add_flag("--stdin", from_stdin, "read text from stdin");
  text_opt->excludes(stdin_opt);
  rewrite->add_flag("--json", as_json, "print the API response JSON");

  std::string host = "127.0.0.1", static_dir;
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "serve the HTTP API");
  serve->add_option("--model", model_dir, "model directory");
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "port")->check(CLI::Range(1, 65535));
  serve->add_option("--static", static_dir, "directory served at /");

  std::string test, split;
  auto* eval = app.add_subcommand("eval", "score a model on a corpus");
  eval->add_option("--model", model_dir, "model directory");
  eval->add_option("--test", test, "test corpus")->required();
  eval->add_option("--split", split, "split name for the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*train) {
    if (ginaz_train(corpus.c_str(), rules.c_str(), out_dir.c_str()) != GINAZ_OK) {
      return Report("train");
    }
    std::fprintf(stderr, "ginaz: model written to %s\n", out_dir.c_str());
    return kExitOk;
  }

  if (*rewrite && !from_stdin && text_opt->count() == 0) {
    std::fprintf(stderr, "ginaz: rewrite needs --text or --stdin\n");
    return kExitUsage;
  }
  if (model_dir.empty()) {
    std::fprintf(stderr, "ginaz: --model is required\n");
    return kExitData;
  }
  Model model;
  if (!model.Load(model_dir)) return Report("loading model");

  if (*rewrite) {
    if (from_stdin) {
      text.assign(std::istreambuf_iterator<char>(std::cin),
                  std::istreambuf_iterator<char>());
    }
    char* out = nullptr;
    if (ginaz_rewrite(model.get(), text.c_str(), speaker.c_str(),
                      listener.c_str(),
                      as_json ? GINAZ_FORMAT_JSON : GINAZ_FORMAT_TEXT,
                      &out) != GINAZ_OK) {
      return Report("rewrite");
    }
    PrintOwned(out);
    if (as_json) std::fputc('\n', stdout);
    return kExitOk;
  }

  if (*eval) {
    char* out = nullptr;
    if (ginaz_eval(model.get(), test.c_str(), split.c_str(), &out) != GINAZ_OK) {
      return Report("eval");
    }
    return PrintOwned(out);
  }

  std::fprintf(stderr, "ginaz: serving model %s on http://%s:%d\n",
               ginaz_model_version(model.get()), host.c_str(), port);
  if (ginaz_serve(model.get(), host.c_str(), port,
                  static_dir.empty() ? nullptr : static_dir.c_str()) != GINAZ_OK) {
    return Report("serve");
  }
  return kExitOk;
}
