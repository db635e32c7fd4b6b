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
// JSON API over the engine.
//
//   POST /api/rewrite  {"text": "...", "speaker": ["m","f"], "listener": ["f"]}
//   GET  /api/health   {"status": "ok", "modelVersion": "..."}
//
// The response layout is pinned by schema/rewrite_response.schema.json.
// Person codes: 0 none, 1 speaker, 2 listener. Errors are
// {"error": code, "detail": message} with status 400 (bad request), 422
// (untranslatable sentence, plus "sentence": index), 503 (translation
// backend unreachable) or 500.

#ifndef GINAZ_SERVICE_H_
#define GINAZ_SERVICE_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "ginaz/engine.h"
#include "ginaz/translate.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace ginaz {

inline constexpr std::size_t kMaxRequestTextBytes = 10000;

struct HttpReply {
  int status = 200;
  std::string body;  // JSON
};

// Serializes a result in the response layout (without translation info).
std::string RewriteResultJson(const RewriteResult& result,
                              std::string_view model_version);

// Stateless request handling over a shared engine and translator.
class RewriteService {
 public:
  RewriteService(std::shared_ptr<const Engine> engine,
                 std::shared_ptr<const Translator> translator);

  HttpReply HandleRewrite(std::string_view request_body) const;
  HttpReply HandleHealth() const;

  const std::string& model_version() const {
    return engine_->bundle().version_tag;
  }

 private:
  std::shared_ptr<const Engine> engine_;
  std::shared_ptr<const Translator> translator_;
};

// httplib server with the API routes, permissive CORS and an optional static
// mount at "/".
class HttpServer {
 public:
  HttpServer(std::shared_ptr<const RewriteService> service,
             const std::string& static_dir);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Returns the bound port; port 0 picks a free one. Throws TransportError.
  int Bind(const std::string& host, int port);
  // Blocks until Stop().
  void Listen();
  void Stop();
  void WaitUntilReady() const;

 private:
  std::shared_ptr<const RewriteService> service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace ginaz

#endif  // GINAZ_SERVICE_H_
