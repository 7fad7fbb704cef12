#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "uztranslit/pipeline.hpp"

namespace uztranslit::http {

struct ServiceOptions {
  std::size_t max_body_bytes = std::size_t{1} << 20;  // 1 MiB
};

struct Response {
  int status;
  std::string body;  // JSON
};

/// POST /api/transliterate body handling, independent of the socket layer.
/// 200 {"result": ...}; 400 {"error": ...} for malformed JSON, a missing or
/// mistyped field, or an unknown alphabet; 413 when over the size cap.
Response handle_transliterate(const Transliterator& t, std::string_view body,
                              std::string_view content_type, const ServiceOptions& options = {});

/// GET /health body: {"status":"ok","lexicon_entries":N}.
std::string health_body(const Transliterator& t);

/// HTTP/1.1 server around one shared Transliterator. Handlers may run on
/// several threads at once; they only read the engine.
class Service {
 public:
  explicit Service(std::shared_ptr<const Transliterator> engine, ServiceOptions options = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  bool bind(const std::string& host, int port);
  /// Binds to a free port and returns it, or -1.
  int bind_to_any_port(const std::string& host);
  /// Blocks until stop() is called.
  bool listen_after_bind();
  void stop();
  bool is_running() const;
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace uztranslit::http
