#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "strokelink/recognizer.hpp"

namespace strokelink {

struct HttpReply {
  int status = 200;
  std::string body;  // JSON
};

inline constexpr std::size_t kMaxTop = 50;

/// POST /recognize. Body: {"strokes": [[[x, y], ...], ...], "top": n}.
/// Reply: {"candidates": [{"label", "score"}], "timing_ms": t}.
/// 400 on a malformed request, 500 on a recognition failure, 503 when
/// `rec` is null (store still loading).
HttpReply handle_recognize(const Recognizer* rec, std::string_view body);

/// GET /health: template count and the active configuration, or 503 while
/// `rec` is null.
HttpReply handle_health(const Recognizer* rec);

/// HTTP front end over handle_recognize / handle_health with permissive CORS
/// headers. The recognizer can be installed after the server starts.
class Server {
 public:
  Server();
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  void set_recognizer(std::shared_ptr<const Recognizer> rec);
  std::shared_ptr<const Recognizer> recognizer() const;

  /// Binds the listening socket; port 0 picks a free port. Returns the bound
  /// port, or -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop(). Requires a successful bind().
  bool listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace strokelink
