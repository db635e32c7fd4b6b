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

#include "ginaz/service.h"

#include <optional>
#include <utility>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "ginaz/errors.h"

namespace ginaz {

using nlohmann::json;

namespace {

json GenderJson(std::optional<Gender> g) {
  if (!g) return nullptr;
  return *g == Gender::kMasculine ? "m" : "f";
}

json TokenJson(const Token& token, const TokenLabel& label) {
  json out = {{"surface", token.surface}};
  const auto marks = label.marks();
  if (marks.empty()) {
    out["person"] = 0;
    out["gender"] = nullptr;
  } else {
    out["person"] = PersonNumber(marks[0].person);
    out["gender"] = GenderJson(marks[0].gender);
  }
  if (marks.size() == 2) {
    out["dual"] = {{"person", PersonNumber(marks[1].person)},
                   {"gender", GenderJson(marks[1].gender)}};
  } else {
    out["dual"] = nullptr;
  }
  return out;
}

json ResultJson(const RewriteResult& result,
                const std::vector<std::optional<std::string>>& sources) {
  json sentences = json::array();
  for (std::size_t s = 0; s < result.identified.size(); ++s) {
    const auto& [sentence, labels] = result.identified[s];
    json tokens = json::array();
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      tokens.push_back(TokenJson(sentence.tokens[i], labels[i]));
    }
    json variants = json::array();
    for (const auto& variant : result.variants) {
      const Sentence& out = variant.sentences[s];
      json vtokens = json::array();
      for (std::size_t i = 0; i < out.tokens.size(); ++i) {
        vtokens.push_back({{"surface", out.tokens[i].surface},
                           {"changed", static_cast<bool>(variant.changed[s][i])}});
      }
      variants.push_back({{"speaker", GenderJson(variant.combo.speaker)},
                          {"listener", GenderJson(variant.combo.listener)},
                          {"text", Detokenize(out)},
                          {"tokens", std::move(vtokens)}});
    }
    json entry = {{"text", sentence.raw},
                  {"tokens", std::move(tokens)},
                  {"variants", std::move(variants)}};
    entry["translatedFrom"] =
        s < sources.size() && sources[s] ? json(*sources[s]) : json(nullptr);
    sentences.push_back(std::move(entry));
  }
  return sentences;
}

HttpReply ErrorReply(int status, std::string_view code, std::string detail) {
  return {status, json{{"error", code}, {"detail", std::move(detail)}}.dump()};
}

// Parses "m"/"f" lists; returns an error message on failure.
std::optional<std::string> ParseSelection(const json& body, const char* field,
                                          std::set<Gender>* out) {
  if (!body.contains(field)) return std::nullopt;
  const json& list = body[field];
  if (!list.is_array()) return std::string(field) + " must be an array";
  for (const json& item : list) {
    if (!item.is_string()) {
      return std::string(field) + " entries must be \"m\" or \"f\"";
    }
    const auto code = item.get<std::string>();
    Gender g;
    if (code == "m") {
      g = Gender::kMasculine;
    } else if (code == "f") {
      g = Gender::kFeminine;
    } else {
      return std::string(field) + " entries must be \"m\" or \"f\"";
    }
    if (!out->insert(g).second) {
      return std::string(field) + " lists \"" + code + "\" twice";
    }
  }
  return std::nullopt;
}

}  // namespace

std::string RewriteResultJson(const RewriteResult& result,
                              std::string_view model_version) {
  return json{{"modelVersion", model_version},
              {"sentences", ResultJson(result, {})}}
      .dump();
}

RewriteService::RewriteService(std::shared_ptr<const Engine> engine,
                               std::shared_ptr<const Translator> translator)
    : engine_(std::move(engine)), translator_(std::move(translator)) {
  if (!engine_ || !translator_) {
    throw PreconditionError("service needs an engine and a translator");
  }
}

HttpReply RewriteService::HandleRewrite(std::string_view request_body) const {
  const json body = json::parse(request_body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) {
    return ErrorReply(400, "bad_request", "body must be a JSON object");
  }
  if (!body.contains("text") || !body["text"].is_string()) {
    return ErrorReply(400, "bad_request", "text must be a string");
  }
  const auto text = body["text"].get<std::string>();
  if (text.size() > kMaxRequestTextBytes) {
    return ErrorReply(400, "bad_request",
                      "text exceeds " + std::to_string(kMaxRequestTextBytes) +
                          " bytes");
  }
  TargetSpec spec;
  for (auto [field, set] : {std::pair{"speaker", &spec.speaker},
                            std::pair{"listener", &spec.listener}}) {
    if (auto error = ParseSelection(body, field, set)) {
      return ErrorReply(400, "bad_request", *error);
    }
  }

  try {
    std::vector<Sentence> sentences = SplitSentences(Normalize(text));
    std::vector<std::optional<std::string>> sources(sentences.size());
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (DetectLanguage(sentences[i].raw) != Language::kEnglish) continue;
      try {
        sources[i] = sentences[i].raw;
        sentences[i] = Tokenize(translator_->Translate(sentences[i].raw));
      } catch (const UntranslatableError& e) {
        HttpReply reply{422, json{{"error", "untranslatable"},
                                  {"detail", e.what()},
                                  {"sentence", i}}
                                 .dump()};
        return reply;
      }
    }
    const RewriteResult result = engine_->RewriteSentences(sentences, spec);
    return {200, json{{"modelVersion", model_version()},
                      {"sentences", ResultJson(result, sources)}}
                     .dump()};
  } catch (const TransportError& e) {
    return ErrorReply(503, "translation_unavailable", e.what());
  } catch (const DecodeError& e) {
    return ErrorReply(400, "bad_request", e.what());
  } catch (const std::exception& e) {
    return ErrorReply(500, "internal", e.what());
  }
}

HttpReply RewriteService::HandleHealth() const {
  return {200, json{{"status", "ok"}, {"modelVersion", model_version()}}.dump()};
}

HttpServer::HttpServer(std::shared_ptr<const RewriteService> service,
                       const std::string& static_dir)
    : service_(std::move(service)), server_(std::make_unique<httplib::Server>()) {
  server_->set_default_headers(
      {{"Access-Control-Allow-Origin", "*"},
       {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
       {"Access-Control-Allow-Headers", "Content-Type"}});
  server_->set_payload_max_length(1 << 20);
  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, "application/json; charset=utf-8");
  };
  server_->Post("/api/rewrite", [this, send](const httplib::Request& req,
                                             httplib::Response& res) {
    send(res, service_->HandleRewrite(req.body));
  });
  server_->Get("/api/health",
               [this, send](const httplib::Request&, httplib::Response& res) {
                 send(res, service_->HandleHealth());
               });
  server_->Options(R"(/api/.*)",
                   [](const httplib::Request&, httplib::Response& res) {
                     res.status = 204;
                   });
  if (!static_dir.empty() && !server_->set_mount_point("/", static_dir)) {
    throw PreconditionError("static directory not found: " + static_dir);
  }
}

HttpServer::~HttpServer() = default;

int HttpServer::Bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = server_->bind_to_any_port(host);
    if (bound < 0) throw TransportError("cannot bind " + host);
    return bound;
  }
  if (!server_->bind_to_port(host, port)) {
    throw TransportError("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::Listen() { server_->listen_after_bind(); }

void HttpServer::Stop() { server_->stop(); }

void HttpServer::WaitUntilReady() const { server_->wait_until_ready(); }

}  // namespace ginaz
