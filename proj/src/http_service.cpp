#include "uztranslit/http_service.hpp"

#include <httplib.h>
#include <json.hpp>

namespace uztranslit::http {

namespace {

using json = nlohmann::json;

constexpr const char* kJson = "application/json";

Response error(int status, const std::string& message) {
  return {status, json{{"error", message}}.dump()};
}

}  // namespace

Response handle_transliterate(const Transliterator& t, std::string_view body,
                              std::string_view content_type, const ServiceOptions& options) {
  if (body.size() > options.max_body_bytes) {
    return error(413, "request body exceeds " + std::to_string(options.max_body_bytes) + " bytes");
  }
  if (content_type.find("json") == std::string_view::npos) {
    return error(400, "Content-Type must be application/json");
  }
  const json request = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (request.is_discarded() || !request.is_object()) {
    return error(400, "body is not a JSON object");
  }
  for (const char* field : {"text", "from", "to"}) {
    if (!request.contains(field)) return error(400, std::string("missing field '") + field + "'");
    if (!request[field].is_string()) return error(400, std::string("field '") + field + "' must be a string");
  }
  bool normalize = true;
  if (request.contains("normalize")) {
    if (!request["normalize"].is_boolean()) return error(400, "field 'normalize' must be a boolean");
    normalize = request["normalize"].get<bool>();
  }
  const auto& from_name = request["from"].get_ref<const std::string&>();
  const auto& to_name = request["to"].get_ref<const std::string&>();
  const auto from = parse_alphabet(from_name);
  const auto to = parse_alphabet(to_name);
  if (!from) return error(400, "unknown alphabet '" + from_name + "'");
  if (!to) return error(400, "unknown alphabet '" + to_name + "'");

  const auto& text = request["text"].get_ref<const std::string&>();
  const std::string result = t.transliterate(text, {*from, *to, normalize});
  return {200, json{{"result", result}}.dump(-1, ' ', false, json::error_handler_t::replace)};
}

std::string health_body(const Transliterator& t) {
  return json{{"status", "ok"}, {"lexicon_entries", t.lexicon().size()}}.dump();
}

struct Service::Impl {
  std::shared_ptr<const Transliterator> engine;
  ServiceOptions options;
  std::string health;
  httplib::Server server;
};

Service::Service(std::shared_ptr<const Transliterator> engine, ServiceOptions options)
    : impl_(std::make_unique<Impl>()) {
  impl_->engine = std::move(engine);
  impl_->options = options;
  impl_->health = health_body(*impl_->engine);

  auto& server = impl_->server;
  server.set_payload_max_length(options.max_body_bytes);

  Impl* self = impl_.get();
  server.Post("/api/transliterate", [self](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle_transliterate(*self->engine, req.body,
                                            req.get_header_value("Content-Type"), self->options);
    res.status = r.status;
    res.set_content(r.body, kJson);
  });
  server.Get("/health", [self](const httplib::Request&, httplib::Response& res) {
    res.set_content(self->health, kJson);
  });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      const std::string msg = res.status == 413 ? "request body too large" : httplib::status_message(res.status);
      res.set_content(json{{"error", msg}}.dump(), kJson);
    }
  });
}

Service::~Service() { stop(); }

bool Service::bind(const std::string& host, int port) { return impl_->server.bind_to_port(host, port); }

int Service::bind_to_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool Service::listen_after_bind() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_) impl_->server.stop();
}

bool Service::is_running() const { return impl_->server.is_running(); }

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace uztranslit::http
