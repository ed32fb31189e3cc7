#include "twist/service.hpp"

#include <set>

#include <httplib.h>

#include "twist/io.hpp"
#include "twist/presets.hpp"

namespace twist {

namespace {

constexpr std::size_t kServiceSolveCap = 1'000'000;

struct HttpError {
  int status;
  std::string kind;
  std::string message;
};

Response reply(const Json &doc, int status = 200) { return {status, doc.dump() + "\n"}; }

Response error_reply(int status, const std::string &kind, const std::string &message) {
  return reply({{"error", {{"kind", kind}, {"message", message}}}}, status);
}

const nlohmann::json &field(const nlohmann::json &req, const char *key) {
  if (!req.contains(key))
    throw HttpError{400, "bad_request", std::string("missing field '") + key + "'"};
  return req.at(key);
}

struct Board {
  TwistGraph graph;
  std::size_t home = 0;
};

Board board_of(const nlohmann::json &req) {
  Board b{graph_from_json(field(req, "graph")), 0};
  b.home = b.graph.home();
  if (req.contains("home")) {
    const auto &h = req.at("home");
    if (!h.is_string())
      throw HttpError{400, "bad_request", "home must be a vertex id"};
    auto v = b.graph.find_vertex(h.get<std::string>());
    if (!v)
      throw HttpError{400, "bad_request", "unknown home vertex"};
    b.home = *v;
  }
  return b;
}

std::uint64_t unsigned_field(const nlohmann::json &req, const char *key,
                             std::optional<std::uint64_t> fallback = std::nullopt) {
  if (!req.contains(key)) {
    if (fallback)
      return *fallback;
    throw HttpError{400, "bad_request", std::string("missing field '") + key + "'"};
  }
  const auto &v = req.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw HttpError{400, "bad_request", std::string(key) + " must be a non-negative integer"};
  return v.get<std::uint64_t>();
}

Json undecided(const std::string &why) { return {{"undecided", true}, {"reason", why}}; }

Json check_certificate(const GroupDescriptor &d, const TwistGraph &g, const PuzzleState &s) {
  Json cert;
  auto walk = shortest_walk(g, s.blank, d.home);
  cert["transport"] = moves_to_json(g, walk);
  PuzzleState at_home = apply_moves(g, s, walk);
  GroupElement e = state_to_element(g, at_home, d.home, d.sites);
  auto r = reduce_element(d, e);
  cert["divisible_by_d"] = r.has_value();
  if (r) {
    cert["sign"] = r->sign();
    cert["rotation_sum"] = r->eta(d.m);
    if (d.m % 2 == 0)
      cert["rotation_sum_mod2"] = r->eta(2);
    if (d.m % 3 == 0)
      cert["rotation_sum_mod3"] = r->eta(3);
    if (d.exceptional)
      cert["permutation_in_group"] = d.exceptional->contains(r->sigma());
  }
  return cert;
}

Response dispatch(std::string_view path, const nlohmann::json &req) {
  if (path == "/api/classify") {
    Board b = board_of(req);
    try {
      return reply({{"descriptor", descriptor_to_json(b.graph, classify(b.graph, b.home))}});
    } catch (const Undecided &e) {
      return reply(undecided(e.what()));
    }
  }
  Board b = board_of(req);
  const TwistGraph &g = b.graph;
  PuzzleState s = state_from_json(g, field(req, "state"), b.home);

  if (path == "/api/moves") {
    auto moves = legal_moves(g, s);
    Json targets = Json::array();
    for (Traversal t : moves)
      targets.push_back(g.vertex(g.to(t)).id);
    return reply({{"moves", moves_to_json(g, moves)}, {"targets", targets}});
  }
  if (path == "/api/apply") {
    const auto &mv = field(req, "move");
    if (!mv.is_string())
      throw HttpError{400, "bad_request", "move must be a move name"};
    Traversal t = g.parse_traversal(mv.get<std::string>());
    try {
      s = apply_move(g, s, t);
    } catch (const IllegalMove &e) {
      throw HttpError{422, "illegal_move", e.what()};
    }
    return reply({{"state", state_to_json(g, s)}, {"solved", is_solved(s, b.home)}});
  }
  if (path == "/api/check") {
    try {
      GroupDescriptor d = classify(g, b.home);
      return reply({{"solvable", is_solvable(d, g, s)},
                    {"case", to_string(d.kind)},
                    {"certificate", check_certificate(d, g, s)}});
    } catch (const Undecided &e) {
      return reply(undecided(e.what()));
    }
  }
  if (path == "/api/solve") {
    std::size_t cap = unsigned_field(req, "cap", kServiceSolveCap);
    try {
      SolveResult r = solve(g, s, b.home, cap);
      Json out{{"status", to_string(r.status)}, {"explored", r.explored}};
      if (r.status == SolveStatus::Solved)
        out["moves"] = moves_to_json(g, r.moves);
      if (r.status == SolveStatus::CapExceeded)
        out["undecided"] = true;
      return reply(out);
    } catch (const Undecided &e) {
      return reply(undecided(e.what()));
    }
  }
  if (path == "/api/scramble") {
    std::uint64_t steps = unsigned_field(req, "steps");
    std::uint64_t seed = unsigned_field(req, "seed");
    auto moves = scramble_moves(g, s, steps, seed);
    return reply({{"state", state_to_json(g, apply_moves(g, s, moves))},
                  {"moves", moves_to_json(g, moves)}});
  }
  throw HttpError{404, "not_found", "no such endpoint"};
}

} // namespace

Response handle(std::string_view method, std::string_view path, std::string_view body) {
  try {
    if (path == "/api/presets") {
      if (method != "GET")
        return error_reply(405, "method_not_allowed", "use GET");
      Json list = Json::array();
      for (const auto &name : preset_names())
        list.push_back({{"name", name}, {"graph", graph_to_json(preset(name))}});
      return reply({{"presets", list}});
    }
    static const std::set<std::string_view> known = {
        "/api/classify", "/api/moves", "/api/apply", "/api/check", "/api/solve",
        "/api/scramble"};
    if (!known.contains(path))
      return error_reply(404, "not_found", "no such endpoint");
    if (method != "POST")
      return error_reply(405, "method_not_allowed", "use POST");
    nlohmann::json req;
    try {
      req = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error &e) {
      return error_reply(400, "bad_request", std::string("malformed JSON: ") + e.what());
    }
    if (!req.is_object())
      return error_reply(400, "bad_request", "request body must be a JSON object");
    return dispatch(path, req);
  } catch (const HttpError &e) {
    return error_reply(e.status, e.kind, e.message);
  } catch (const GraphError &e) {
    return error_reply(400, "invalid_graph", e.what());
  } catch (const StateError &e) {
    return error_reply(400, "invalid_state", e.what());
  } catch (const std::invalid_argument &e) {
    return error_reply(400, "bad_request", e.what());
  } catch (const nlohmann::json::exception &e) {
    return error_reply(400, "bad_request", e.what());
  }
}

bool serve(const ServeOptions &options) {
  httplib::Server server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  if (options.static_dir && !server.set_mount_point("/", *options.static_dir))
    return false;
  auto adapt = [](const httplib::Request &req, httplib::Response &res) {
    Response r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.Get(R"(/api/.*)", adapt);
  server.Post(R"(/api/.*)", adapt);
  server.Options(R"(/api/.*)", [](const httplib::Request &, httplib::Response &res) {
    res.status = 204;
  });
  return server.listen(options.host, options.port);
}

} // namespace twist
