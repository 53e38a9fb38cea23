#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace satkit {

struct ServiceOptions {
  // Time budget for each solver call made while answering a request.
  std::optional<std::chrono::milliseconds> timeout;
  // Directory served at `/`; empty disables static serving.
  std::string static_dir;
  // Seed used by /new when the request has none. Defaults to milliseconds
  // since the epoch.
  std::function<std::uint64_t()> clock_seed;
};

struct HttpReply {
  int status = 200;
  std::string body;  // JSON, empty for 204
};

// Request handlers, independent of the HTTP server. Each takes the raw JSON
// body. Shapes are documented in docs/api.md.
HttpReply api_new(std::string_view body, const ServiceOptions& opts);
HttpReply api_check(std::string_view body, const ServiceOptions& opts);
HttpReply api_hint(std::string_view body, const ServiceOptions& opts);
HttpReply api_solve(std::string_view body, const ServiceOptions& opts);

// Routes POST /api/sudoku/{new,check,hint,solve}, GET /healthz and static files.
class SudokuServer {
 public:
  explicit SudokuServer(ServiceOptions opts);
  ~SudokuServer();
  SudokuServer(const SudokuServer&) = delete;
  SudokuServer& operator=(const SudokuServer&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1 on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace satkit
