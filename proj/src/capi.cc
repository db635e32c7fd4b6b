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

#include "ginaz/ginaz.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ginaz/bundle.h"
#include "ginaz/corpus.h"
#include "ginaz/engine.h"
#include "ginaz/errors.h"
#include "ginaz/eval.h"
#include "ginaz/rule_table.h"
#include "ginaz/service.h"
#include "ginaz/text.h"
#include "ginaz/translate.h"

struct ginaz_model {
  std::shared_ptr<const ginaz::Engine> engine;
  std::shared_ptr<const ginaz::RewriteService> service;
};

namespace {

thread_local std::string last_error;

ginaz_status Fail(ginaz_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
ginaz_status Guard(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const ginaz::DecodeError& e) {
    return Fail(GINAZ_ERR_DECODE, e.what());
  } catch (const ginaz::ParseError& e) {
    return Fail(GINAZ_ERR_PARSE, e.what());
  } catch (const ginaz::ModelError& e) {
    return Fail(GINAZ_ERR_MODEL, e.what());
  } catch (const ginaz::BundleError& e) {
    return Fail(GINAZ_ERR_BUNDLE, e.what());
  } catch (const ginaz::PreconditionError& e) {
    return Fail(GINAZ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const ginaz::TransportError& e) {
    return Fail(GINAZ_ERR_TRANSPORT, e.what());
  } catch (const ginaz::UntranslatableError& e) {
    return Fail(GINAZ_ERR_UNTRANSLATABLE, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return Fail(GINAZ_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(GINAZ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(GINAZ_ERR_INTERNAL, e.what());
  }
}

char* Duplicate(std::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

nlohmann::json ParseGenderList(const char* list, const char* what) {
  nlohmann::json out = nlohmann::json::array();
  if (list == nullptr) return out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item != "m" && item != "f") {
      throw ginaz::PreconditionError(std::string(what) + " must list m and/or f, got '" +
                                     item + "'");
    }
    out.push_back(item);
  }
  return out;
}

ginaz_status StatusForHttp(int status) {
  switch (status) {
    case 200:
      return GINAZ_OK;
    case 400:
      return GINAZ_ERR_INVALID_ARGUMENT;
    case 422:
      return GINAZ_ERR_UNTRANSLATABLE;
    case 503:
      return GINAZ_ERR_TRANSPORT;
    default:
      return GINAZ_ERR_INTERNAL;
  }
}

std::string LabelCode(const nlohmann::json& token) {
  auto mark = [](const nlohmann::json& person, const nlohmann::json& gender) {
    return std::to_string(person.get<int>()) +
           (gender.get<std::string>() == "m" ? "M" : "F");
  };
  if (token["person"].get<int>() == 0) return "N";
  std::string code = mark(token["person"], token["gender"]);
  if (!token["dual"].is_null()) {
    code += "+" + mark(token["dual"]["person"], token["dual"]["gender"]);
  }
  return code;
}

// Plain text rendering of a response: an [identified] section with gendered
// tokens suffixed by their label, then one section per variant.
std::string RenderText(const nlohmann::json& response) {
  const auto& sentences = response["sentences"];
  std::ostringstream out;
  out << "[identified]\n";
  for (const auto& s : sentences) {
    std::string line;
    for (const auto& t : s["tokens"]) {
      if (!line.empty()) line += ' ';
      line += t["surface"].get<std::string>();
      const std::string code = LabelCode(t);
      if (code != "N") line += "/" + code;
    }
    out << line << '\n';
  }
  if (sentences.empty()) return out.str();
  const std::size_t variants = sentences[0]["variants"].size();
  for (std::size_t v = 0; v < variants; ++v) {
    const auto& first = sentences[0]["variants"][v];
    auto code = [](const nlohmann::json& g) {
      return g.is_null() ? std::string("-") : g.get<std::string>();
    };
    out << "[speaker=" << code(first["speaker"])
        << " listener=" << code(first["listener"]) << "]\n";
    for (const auto& s : sentences) {
      out << s["variants"][v]["text"].get<std::string>() << '\n';
    }
  }
  return out.str();
}

}  // namespace

extern "C" {

const char* ginaz_version(void) { return "1.0.0"; }

const char* ginaz_last_error(void) { return last_error.c_str(); }

void ginaz_string_free(char* s) { std::free(s); }

ginaz_status ginaz_train(const char* corpus_path, const char* rules_path,
                         const char* out_dir) {
  return Guard([&] {
    if (!corpus_path || !rules_path || !out_dir) {
      return Fail(GINAZ_ERR_INVALID_ARGUMENT, "train needs corpus, rules and output paths");
    }
    auto tuples = ginaz::ParseCorpusFile(corpus_path);
    auto rules = ginaz::RuleTable::ParseFile(rules_path);
    auto bundle = ginaz::BuildBundle(tuples, std::move(rules));
    ginaz::SaveBundle(bundle, out_dir);
    return GINAZ_OK;
  });
}

ginaz_status ginaz_model_load(const char* dir, ginaz_model** out) {
  return Guard([&] {
    if (!dir || !out) return Fail(GINAZ_ERR_INVALID_ARGUMENT, "model_load needs a directory");
    *out = nullptr;
    auto bundle = std::make_shared<const ginaz::ModelBundle>(ginaz::LoadBundle(dir));
    auto engine = std::make_shared<const ginaz::Engine>(std::move(bundle));
    std::shared_ptr<const ginaz::Translator> translator = ginaz::MakeTranslatorFromEnv();
    auto service = std::make_shared<const ginaz::RewriteService>(engine, translator);
    *out = new ginaz_model{std::move(engine), std::move(service)};
    return GINAZ_OK;
  });
}

void ginaz_model_free(ginaz_model* model) { delete model; }

const char* ginaz_model_version(const ginaz_model* model) {
  return model ? model->engine->bundle().version_tag.c_str() : "";
}

ginaz_status ginaz_rewrite(const ginaz_model* model, const char* text,
                           const char* speaker, const char* listener,
                           ginaz_format format, char** out) {
  return Guard([&] {
    if (!model || !text || !out) {
      return Fail(GINAZ_ERR_INVALID_ARGUMENT, "rewrite needs a model, text and output");
    }
    *out = nullptr;
    ginaz::ValidateUtf8(text);
    const nlohmann::json request = {
        {"text", text},
        {"speaker", ParseGenderList(speaker, "speaker")},
        {"listener", ParseGenderList(listener, "listener")}};
    const ginaz::HttpReply reply = model->service->HandleRewrite(request.dump());
    if (reply.status != 200) {
      const auto body = nlohmann::json::parse(reply.body);
      return Fail(StatusForHttp(reply.status), body.value("detail", reply.body));
    }
    *out = Duplicate(format == GINAZ_FORMAT_JSON
                         ? reply.body
                         : RenderText(nlohmann::json::parse(reply.body)));
    return GINAZ_OK;
  });
}

ginaz_status ginaz_handle_request(const ginaz_model* model, const char* method,
                                  const char* path, const char* body,
                                  int* http_status, char** out_body) {
  return Guard([&] {
    if (!model || !method || !path || !http_status || !out_body) {
      return Fail(GINAZ_ERR_INVALID_ARGUMENT, "handle_request needs every argument");
    }
    *out_body = nullptr;
    const std::string_view m(method);
    const std::string_view p(path);
    ginaz::HttpReply reply;
    if (m == "POST" && p == "/api/rewrite") {
      reply = model->service->HandleRewrite(body ? body : "");
    } else if (m == "GET" && p == "/api/health") {
      reply = model->service->HandleHealth();
    } else {
      reply = {404, nlohmann::json{{"error", "not_found"},
                                   {"detail", std::string(m) + " " + std::string(p)}}
                        .dump()};
    }
    *http_status = reply.status;
    *out_body = Duplicate(reply.body);
    return GINAZ_OK;
  });
}

ginaz_status ginaz_eval(const ginaz_model* model, const char* corpus_path,
                        const char* split, char** out_tsv) {
  return Guard([&] {
    if (!model || !corpus_path || !out_tsv) {
      return Fail(GINAZ_ERR_INVALID_ARGUMENT, "eval needs a model, corpus and output");
    }
    *out_tsv = nullptr;
    const auto tuples = ginaz::ParseCorpusFile(corpus_path);
    const std::string name =
        split && *split ? split : std::filesystem::path(corpus_path).stem().string();
    std::ostringstream out;
    ginaz::WriteMetrics(ginaz::EvaluateCorpus(*model->engine, tuples, name), out);
    *out_tsv = Duplicate(out.str());
    return GINAZ_OK;
  });
}

ginaz_status ginaz_serve(const ginaz_model* model, const char* host, int port,
                         const char* static_dir) {
  return Guard([&] {
    if (!model || !host || port < 0 || port > 65535) {
      return Fail(GINAZ_ERR_INVALID_ARGUMENT, "serve needs a model, host and port");
    }
    ginaz::HttpServer server(model->service, static_dir ? static_dir : "");
    server.Bind(host, port);
    server.Listen();
    return GINAZ_OK;
  });
}

}  // extern "C"
