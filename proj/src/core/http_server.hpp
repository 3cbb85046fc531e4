#pragma once

#include <memory>
#include <string>

#include "core/engine.hpp"

namespace httplib {
class Server;
}

namespace vocp {

int http_status_for(ErrorCode code);

/// The /v1 HTTP gateway over one Engine.
class HttpServer {
 public:
  explicit HttpServer(Engine& engine);
  ~HttpServer();

  /// Binds host:port (port 0 picks a free one) and returns the bound port.
  /// Throws Error{kAddressInUse}.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  void serve();
  void stop();
  void wait_until_ready() const;

 private:
  void install_routes();

  Engine& engine_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace vocp
