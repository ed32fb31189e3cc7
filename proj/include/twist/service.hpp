#ifndef TWIST_SERVICE_HPP
#define TWIST_SERVICE_HPP

// Stateless HTTP/JSON facade. Every request carries the full graph and state;
// handle() is a pure function of its arguments, and serve() only adapts it
// to sockets.
//
//   GET  /api/presets
//   POST /api/classify  {graph, home?}
//   POST /api/moves     {graph, state}
//   POST /api/apply     {graph, state, move}
//   POST /api/check     {graph, state}
//   POST /api/solve     {graph, state, cap?}
//   POST /api/scramble  {graph, state, steps, seed}
//
// 400 for malformed payloads, 422 for an illegal move, 200 with
// "undecided": true when a bounded search runs out of budget.

#include <optional>
#include <string>
#include <string_view>

namespace twist {

struct Response {
  int status = 200;
  std::string body;
};

Response handle(std::string_view method, std::string_view path, std::string_view body);

struct ServeOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::optional<std::string> static_dir;
};

/// Blocks until the server stops. Returns false if the port could not be bound.
bool serve(const ServeOptions &options);

} // namespace twist

#endif
