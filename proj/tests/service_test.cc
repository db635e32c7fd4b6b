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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <doctest.h>
#include <httplib.h>
#include <json.hpp>

#include "ginaz/errors.h"
#include "ginaz/service.h"
#include "test_util.h"

namespace ginaz {
namespace {

using nlohmann::json;

std::shared_ptr<const RewriteService> StubService() {
  static const auto service = std::make_shared<const RewriteService>(
      std::make_shared<const Engine>(testing::SharedBundle()),
      std::make_shared<const StubTranslator>());
  return service;
}

json Request(const std::string& text, const std::vector<std::string>& speaker,
             const std::vector<std::string>& listener) {
  return {{"text", text}, {"speaker", speaker}, {"listener", listener}};
}

// Serves StubService() on a free local port for the fixture's lifetime.
class LiveServer {
 public:
  LiveServer() : server_(StubService(), "") {
    port_ = server_.Bind("127.0.0.1", 0);
    thread_ = std::thread([this] { server_.Listen(); });
    server_.WaitUntilReady();
  }
  ~LiveServer() {
    server_.Stop();
    thread_.join();
  }

  httplib::Client Client() const { return httplib::Client("127.0.0.1", port_); }

 private:
  HttpServer server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_CASE("rewrite response shape for the motivating example") {
  const HttpReply reply =
      StubService()->HandleRewrite(Request(testing::kFig1, {"f"}, {}).dump());
  REQUIRE(reply.status == 200);
  const json body = json::parse(reply.body);
  CHECK(body["modelVersion"] == StubService()->model_version());
  REQUIRE(body["sentences"].size() == 1);
  const json& s = body["sentences"][0];
  CHECK(s["text"] == testing::kFig1);
  CHECK(s["translatedFrom"].is_null());
  REQUIRE(s["tokens"].size() == 4);
  CHECK(s["tokens"][1] == json{{"surface", "طبيب"}, {"person", 1}, {"gender", "m"},
                               {"dual", nullptr}});
  CHECK(s["tokens"][0]["person"] == 0);
  CHECK(s["tokens"][0]["gender"].is_null());
  CHECK(s["tokens"][3]["person"] == 2);
  REQUIRE(s["variants"].size() == 1);
  const json& v = s["variants"][0];
  CHECK(v["speaker"] == "f");
  CHECK(v["listener"].is_null());
  CHECK(v["text"] == testing::kFig1SpeakerF);
  CHECK(v["tokens"][1] == json{{"surface", "طبيبة"}, {"changed", true}});
  CHECK(v["tokens"][3]["changed"] == false);
}

TEST_CASE("variant count for all sixteen selections") {
  const std::vector<std::vector<std::string>> choices = {{}, {"m"}, {"f"}, {"m", "f"}};
  for (const auto& speaker : choices) {
    for (const auto& listener : choices) {
      const HttpReply reply = StubService()->HandleRewrite(
          Request(testing::kFig1, speaker, listener).dump());
      REQUIRE(reply.status == 200);
      const json body = json::parse(reply.body);
      const std::size_t expected =
          speaker.empty() && listener.empty()
              ? 0
              : std::max<std::size_t>(1, speaker.size()) *
                    std::max<std::size_t>(1, listener.size());
      REQUIRE(body["sentences"][0]["variants"].size() == expected);
      // Tokens are always returned, even without a selection.
      REQUIRE(body["sentences"][0]["tokens"].size() == 4);
    }
  }
}

TEST_CASE("English input is translated and remembered") {
  const HttpReply reply = StubService()->HandleRewrite(
      Request("I am a doctor and you are a nurse", {"f"}, {"m"}).dump());
  REQUIRE(reply.status == 200);
  const json s = json::parse(reply.body)["sentences"][0];
  CHECK(s["translatedFrom"] == "I am a doctor and you are a nurse");
  CHECK(s["text"] == testing::kFig1);
  CHECK(s["variants"][0]["text"] == "أنا طبيبة وأنت ممرض");
}

TEST_CASE("request validation") {
  auto status = [](const std::string& body) {
    return StubService()->HandleRewrite(body).status;
  };
  CHECK(status("not json") == 400);
  CHECK(status("[1,2]") == 400);
  CHECK(status(R"({"speaker":["f"]})") == 400);
  CHECK(status(R"({"text":5})") == 400);
  CHECK(status(R"({"text":"x","speaker":"f"})") == 400);
  CHECK(status(R"({"text":"x","speaker":["x"]})") == 400);
  CHECK(status(R"({"text":"x","listener":["f","f"]})") == 400);
  CHECK(status(R"({"text":"x","listener":[1]})") == 400);
  // Arabic filler: two bytes per letter.
  std::string limit;
  while (limit.size() < kMaxRequestTextBytes) limit += "ب";
  CHECK(status(json{{"text", limit}}.dump()) == 200);
  CHECK(status(json{{"text", limit + "ب"}}.dump()) == 400);
  CHECK(status(json{{"text", std::string(11000, 'a')}}.dump()) == 400);
  CHECK(status(R"({"text":""})") == 200);
  const json error = json::parse(StubService()->HandleRewrite("{").body);
  CHECK(error["error"] == "bad_request");
  CHECK(error["detail"].is_string());
}

TEST_CASE("untranslatable English is a 422 naming the sentence") {
  const HttpReply reply = StubService()->HandleRewrite(
      Request("أنا طبيب. quantum pancake tastes odd.", {"f"}, {}).dump());
  CHECK(reply.status == 422);
  const json body = json::parse(reply.body);
  CHECK(body["error"] == "untranslatable");
  CHECK(body["sentence"] == 1);
}

TEST_CASE("mixed language sentences pass through untranslated") {
  const HttpReply reply = StubService()->HandleRewrite(
      Request("hello مرحبا عزيزي", {}, {"f"}).dump());
  REQUIRE(reply.status == 200);
  CHECK(json::parse(reply.body)["sentences"][0]["translatedFrom"].is_null());
}

TEST_CASE("an unreachable translator is a 503") {
  int dead_port = 0;
  {
    httplib::Server probe;
    dead_port = probe.bind_to_any_port("127.0.0.1");
  }
  const RewriteService service(
      std::make_shared<const Engine>(testing::SharedBundle()),
      std::make_shared<const HttpTranslator>(HttpTranslatorConfig{
          "http://127.0.0.1:" + std::to_string(dead_port) + "/translate", "", 300}));
  const HttpReply reply =
      service.HandleRewrite(Request("I am a doctor", {"f"}, {}).dump());
  CHECK(reply.status == 503);
  CHECK(json::parse(reply.body)["error"] == "translation_unavailable");
  // Arabic input never touches the translator.
  CHECK(service.HandleRewrite(Request(testing::kFig1, {"f"}, {}).dump()).status == 200);
}

TEST_CASE("responses are deterministic byte for byte") {
  const std::string body = Request("أنا طبيب وأنت ممرضة. شكرا يا عزيزتي",
                                   {"m", "f"}, {"m", "f"})
                               .dump();
  const std::string first = StubService()->HandleRewrite(body).body;
  for (int i = 0; i < 5; ++i) {
    REQUIRE(StubService()->HandleRewrite(body).body == first);
  }
}

TEST_CASE("health endpoint") {
  const HttpReply reply = StubService()->HandleHealth();
  CHECK(reply.status == 200);
  CHECK(json::parse(reply.body)["status"] == "ok");
}

TEST_CASE("live server routes, CORS and errors") {
  LiveServer server;
  auto client = server.Client();
  const auto health = client.Get("/api/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(health->get_header_value("Access-Control-Allow-Origin") == "*");

  const auto rewrite = client.Post(
      "/api/rewrite", Request(testing::kFig1, {"f"}, {"m"}).dump(), "application/json");
  REQUIRE(rewrite);
  CHECK(rewrite->status == 200);
  CHECK(json::parse(rewrite->body)["sentences"][0]["variants"][0]["text"] ==
        "أنا طبيبة وأنت ممرض");
  CHECK(rewrite->body ==
        StubService()->HandleRewrite(Request(testing::kFig1, {"f"}, {"m"}).dump()).body);

  const auto bad = client.Post("/api/rewrite", "nope", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);

  const auto preflight = client.Options("/api/rewrite");
  REQUIRE(preflight);
  CHECK(preflight->status == 204);
  CHECK(preflight->get_header_value("Access-Control-Allow-Methods").find("POST") !=
        std::string::npos);

  const auto missing = client.Get("/nowhere");
  REQUIRE(missing);
  CHECK(missing->status == 404);
}

TEST_CASE("server serves a static directory") {
  const auto dir = testing::ScratchDir("static");
  {
    std::ofstream(dir / "index.html") << "<html>ginaz</html>";
  }
  HttpServer server(StubService(), dir.string());
  const int port = server.Bind("127.0.0.1", 0);
  std::thread thread([&] { server.Listen(); });
  server.WaitUntilReady();
  httplib::Client client("127.0.0.1", port);
  const auto page = client.Get("/index.html");
  REQUIRE(page);
  CHECK(page->body == "<html>ginaz</html>");
  server.Stop();
  thread.join();
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(HttpServer(StubService(), "/no/such/dir"), PreconditionError);
}

}  // namespace
}  // namespace ginaz
