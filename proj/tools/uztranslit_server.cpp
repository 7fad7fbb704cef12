#include <CLI11.hpp>

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <memory>

#include "uztranslit/error.hpp"
#include "uztranslit/http_service.hpp"

namespace {

uztranslit::http::Service* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"JSON-over-HTTP Uzbek transliteration service"};
  std::string bind = "127.0.0.1";
  int port = 8080;
  std::string lexicon_path;
  std::size_t max_body = std::size_t{1} << 20;
  app.add_option("--bind", bind, "Address to listen on")->capture_default_str();
  app.add_option("--port", port, "TCP port (0 picks a free one)")->capture_default_str()->check(CLI::Range(0, 65535));
  app.add_option("--lexicon", lexicon_path, "Exception lexicon TSV (default: bundled)");
  app.add_option("--max-body", max_body, "Request body cap in bytes")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  if (lexicon_path.empty()) {
    if (const char* env = std::getenv("UZTRANSLIT_LEXICON"); env && *env) lexicon_path = env;
  }

  std::shared_ptr<const uztranslit::Transliterator> engine;
  try {
    engine = std::make_shared<const uztranslit::Transliterator>(
        lexicon_path.empty() ? uztranslit::ExceptionLexicon::load_default()
                             : uztranslit::ExceptionLexicon::load_file(lexicon_path));
  } catch (const std::exception& e) {
    std::cerr << "uztranslit-server: " << e.what() << '\n';
    return 2;
  }

  uztranslit::http::Service service(engine, {max_body});
  g_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  // Bind only once the engine is ready, so clients never see a half-loaded service.
  int bound = port;
  if (port == 0) {
    bound = service.bind_to_any_port(bind);
  } else if (!service.bind(bind, port)) {
    bound = -1;
  }
  if (bound < 0) {
    std::cerr << "uztranslit-server: cannot bind " << bind << ':' << port << '\n';
    return 2;
  }
  std::cout << "listening on " << bind << ':' << bound << " (" << engine->lexicon().size()
            << " lexicon entries)" << std::endl;
  service.listen_after_bind();
  g_service = nullptr;
  return 0;
}
