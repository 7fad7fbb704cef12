#include <doctest.h>

#include <httplib.h>
#include <json.hpp>

#include <thread>

#include "uztranslit/http_service.hpp"

using namespace uztranslit;
using json = nlohmann::json;

namespace {

std::shared_ptr<const Transliterator> engine() {
  static const auto t = std::make_shared<const Transliterator>(Transliterator::with_default_lexicon());
  return t;
}

http::Response post(const std::string& body, const std::string& type = "application/json",
                    http::ServiceOptions opts = {}) {
  return http::handle_transliterate(*engine(), body, type, opts);
}

// Server on an ephemeral loopback port, stopped on scope exit.
struct RunningService {
  explicit RunningService(std::shared_ptr<const Transliterator> t, http::ServiceOptions opts = {})
      : service(std::move(t), opts) {
    port = service.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    thread = std::thread([this] { service.listen_after_bind(); });
    service.wait_until_ready();
  }
  ~RunningService() {
    service.stop();
    thread.join();
  }
  http::Service service;
  int port = -1;
  std::thread thread;
};

}  // namespace

TEST_SUITE("http_service") {

TEST_CASE("transliterate examples") {
  auto r = post(R"({"text":"Шўрва","from":"cyrillic","to":"latin"})");
  CHECK(r.status == 200);
  CHECK(json::parse(r.body) == json{{"result", "Shoʻrva"}});

  r = post(R"({"text":"","from":"latin","to":"new_latin"})");
  CHECK(r.status == 200);
  CHECK(json::parse(r.body)["result"] == "");

  r = post(R"({"text":"x","from":"latin","to":"runes"})");
  CHECK(r.status == 400);
  CHECK(json::parse(r.body)["error"].get<std::string>().find("runes") != std::string::npos);
}

TEST_CASE("normalize option") {
  auto r = post(R"({"text":"o'zbek","from":"latin","to":"new_latin"})");
  CHECK(json::parse(r.body)["result"] == "ōzbek");
  r = post(R"({"text":"o'zbek","from":"latin","to":"new_latin","normalize":false})");
  CHECK(json::parse(r.body)["result"] == "o'zbek");
  CHECK(post(R"({"text":"a","from":"latin","to":"latin","normalize":"yes"})").status == 400);
}

TEST_CASE("bad requests are 400") {
  CHECK(post("not json").status == 400);
  CHECK(post("[1,2]").status == 400);
  CHECK(post(R"({"from":"latin","to":"cyrillic"})").status == 400);
  CHECK(post(R"({"text":"a","to":"cyrillic"})").status == 400);
  CHECK(post(R"({"text":5,"from":"latin","to":"cyrillic"})").status == 400);
  CHECK(post(R"({"text":"a","from":"Latin","to":"cyrillic"})").status == 400);
  CHECK(post(R"({"text":"a","from":"latin","to":"cyrillic"})", "text/plain").status == 400);
  const auto r = post("{");
  CHECK(json::parse(r.body).contains("error"));
}

TEST_CASE("oversized body is 413") {
  http::ServiceOptions small{64};
  const std::string body = R"({"text":")" + std::string(100, 'a') + R"(","from":"latin","to":"cyrillic"})";
  CHECK(post(body, "application/json", small).status == 413);
  CHECK(post(body).status == 200);
}

TEST_CASE("health body") {
  CHECK(json::parse(http::health_body(*engine())) == json{{"status", "ok"}, {"lexicon_entries", 17}});
  const auto seed =
      Transliterator(ExceptionLexicon::load_file(UZTRANSLIT_DATA_DIR "/loanwords.tsv"));
  CHECK(json::parse(http::health_body(seed)) == json{{"status", "ok"}, {"lexicon_entries", 15}});
}

TEST_CASE("live server: endpoints, errors and size cap") {
  RunningService s(engine(), http::ServiceOptions{4096});
  httplib::Client client("127.0.0.1", s.port);

  auto res = client.Get("/health");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->body == http::health_body(*engine()));
  CHECK(client.Get("/health")->body == res->body);

  res = client.Post("/api/transliterate", R"({"text":"АҚШ ва ЮНЕСКО","from":"cyrillic","to":"latin"})",
                    "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(json::parse(res->body)["result"] == "AQSH va YUNESKO");
  CHECK(res->get_header_value("Content-Type") == "application/json");

  res = client.Post("/api/transliterate", R"({"text":"x","from":"latin","to":"runes"})", "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);

  res = client.Post("/api/transliterate", std::string(8192, ' '), "application/json");
  REQUIRE(res);
  CHECK(res->status == 413);

  res = client.Get("/nope");
  REQUIRE(res);
  CHECK(res->status == 404);
  CHECK(json::parse(res->body).contains("error"));
}

TEST_CASE("live server: concurrent identical requests") {
  RunningService s(engine());
  const std::string body = R"({"text":"Шўрва, октябрьда кальций!","from":"cyrillic","to":"new_latin"})";
  const std::string expected = post(body).body;
  std::vector<std::string> bodies(32);
  std::vector<int> statuses(32, 0);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    threads.emplace_back([&, i] {
      httplib::Client client("127.0.0.1", s.port);
      if (auto res = client.Post("/api/transliterate", body, "application/json")) {
        statuses[i] = res->status;
        bodies[i] = res->body;
      }
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    CHECK(statuses[i] == 200);
    CHECK(bodies[i] == expected);
  }
}

TEST_CASE("nothing listens before bind") {
  http::Service service(engine());
  httplib::Client client("127.0.0.1", 1);
  client.set_connection_timeout(0, 200000);
  CHECK_FALSE(client.Get("/health"));
}

}  // TEST_SUITE
