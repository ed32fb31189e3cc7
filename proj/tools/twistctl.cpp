// twistctl: command line front end for twisted puzzle boards.
//
// Exit codes: 0 success / solvable / agree, 1 unsolvable / disagree,
// 2 invalid input or usage, 3 undecided (a bounded search ran out of budget).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "twist/io.hpp"
#include "twist/presets.hpp"
#include "twist/service.hpp"

using namespace twist;

namespace {

constexpr int kUnsolvable = 1;
constexpr int kInvalid = 2;
constexpr int kUndecided = 3;

std::string slurp(const std::string &path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string &text, const std::string &out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f)
    throw std::invalid_argument("cannot write " + out);
  f << text;
}

std::size_t home_of(const TwistGraph &g, const std::string &home) {
  if (home.empty())
    return g.home();
  auto v = g.find_vertex(home);
  if (!v)
    throw std::invalid_argument("unknown home vertex '" + home + "'");
  return *v;
}

void print_descriptor(const TwistGraph &g, const GroupDescriptor &d) {
  std::cout << "case: " << to_string(d.kind) << "\n"
            << "order: " << d.order << "\n"
            << "home: " << g.vertex(d.home).id << "\n"
            << "n: " << d.n << "\n"
            << "m: " << d.m << " (board m = " << d.original_m << ", d = " << d.reduction.d
            << ")\n";
  std::cout << "bipartite: " << (d.bipartite.value ? "yes" : "no") << "\n";
  if (!d.bipartite.value && !d.bipartite.odd_cycle.empty()) {
    std::cout << "  odd cycle:";
    for (auto v : d.bipartite.odd_cycle)
      std::cout << " " << g.vertex(v).id;
    std::cout << "\n";
  }
  std::cout << "twist bipartite: " << (d.twist_bipartite.value ? "yes" : "no") << "\n";
  std::cout << "phi surjective: " << (d.surjectivity.surjective ? "yes" : "no")
            << " (gcd " << d.surjectivity.gcd << ")\n";
  std::cout << "two-vertex-connected: " << (d.report.two_vertex_connected ? "yes" : "no")
            << "\n";
  std::cout << "collapse class: " << to_string(d.report.simple_collapse_class) << "\n";
  std::cout << "generators: " << d.generators.size() << "\n";
  for (const auto &p : d.generators) {
    std::cout << " ";
    for (Traversal t : p.steps())
      std::cout << " " << g.traversal_name(t);
    std::cout << "\n";
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Classify, check and solve twisted sliding puzzles on graphs"};
  app.require_subcommand(1);

  std::string graph_path, state_path, home, out, name;
  std::size_t cap = kDefaultCap, steps = 20;
  std::uint64_t seed = 1;
  bool json = false;
  std::optional<int> m;
  std::vector<std::string> twists;
  ServeOptions serve_opts;
  std::string static_dir;

  auto *validate = app.add_subcommand("validate", "check a twistgraph/1 document");
  validate->add_option("graph", graph_path, "graph file")->required();

  auto *classify_cmd = app.add_subcommand("classify", "print the solvable group");
  classify_cmd->add_option("graph", graph_path, "graph file")->required();
  classify_cmd->add_option("--home", home, "blank home vertex");
  classify_cmd->add_option("--cap", cap, "fallback enumeration cap");
  classify_cmd->add_flag("--json", json, "emit JSON");

  auto *check = app.add_subcommand("check", "exit 0 if solvable, 1 if not");
  check->add_option("graph", graph_path, "graph file")->required();
  check->add_option("state", state_path, "state file")->required();
  check->add_option("--home", home, "blank home vertex");
  check->add_flag("--json", json, "emit JSON");

  auto *solve_cmd = app.add_subcommand("solve", "shortest solving move sequence");
  solve_cmd->add_option("graph", graph_path, "graph file")->required();
  solve_cmd->add_option("state", state_path, "state file")->required();
  solve_cmd->add_option("--home", home, "blank home vertex");
  solve_cmd->add_option("--cap", cap, "search budget in states");

  auto *enumerate = app.add_subcommand("enumerate", "BFS over reachable states");
  enumerate->add_option("graph", graph_path, "graph file")->required();
  enumerate->add_option("--home", home, "blank home vertex");
  enumerate->add_option("--cap", cap, "state cap");

  auto *verify = app.add_subcommand("verify", "compare classifier and enumeration");
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("--home", home, "blank home vertex");
  verify->add_option("--cap", cap, "state cap");

  auto *preset_cmd = app.add_subcommand("preset", "write a preset board");
  preset_cmd->add_option("name", name, "grid:WxH, cycle:K, theta5, theta7, fifteen_plus_four, figure8, k33, k4")
      ->required();
  preset_cmd->add_option("--m", m, "modulus");
  preset_cmd->add_option("--twist", twists, "edge=value override (repeatable)");
  preset_cmd->add_option("--out", out, "output file");

  auto *scramble_cmd = app.add_subcommand("scramble", "random walk from a state");
  scramble_cmd->add_option("graph", graph_path, "graph file")->required();
  scramble_cmd->add_option("--state", state_path, "start state (default: solved)");
  scramble_cmd->add_option("--home", home, "blank home vertex");
  scramble_cmd->add_option("--steps", steps, "number of moves");
  scramble_cmd->add_option("--seed", seed, "random seed");
  scramble_cmd->add_option("--out", out, "output file");

  auto *serve_cmd = app.add_subcommand("serve", "run the HTTP service");
  serve_cmd->add_option("--port", serve_opts.port, "port");
  serve_cmd->add_option("--host", serve_opts.host, "bind address");
  serve_cmd->add_option("--static", static_dir, "directory of static files to serve at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (*validate) {
      TwistGraph g = parse_twist_graph(slurp(graph_path));
      std::cout << validation_to_json(g, twist::validate(g)).dump(2) << "\n";
      return 0;
    }
    if (*preset_cmd) {
      PresetOptions opts;
      opts.m = m;
      for (const auto &t : twists) {
        auto eq = t.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("--twist expects edge=value");
        opts.twists[t.substr(0, eq)] = std::stoll(t.substr(eq + 1));
      }
      emit(serialize_twist_graph(preset(name, opts)), out);
      return 0;
    }
    if (*serve_cmd) {
      if (!static_dir.empty())
        serve_opts.static_dir = static_dir;
      std::cerr << "listening on " << serve_opts.host << ":" << serve_opts.port << "\n";
      if (!serve(serve_opts)) {
        std::cerr << "could not start the server\n";
        return kInvalid;
      }
      return 0;
    }

    TwistGraph g = parse_twist_graph(slurp(graph_path));
    const std::size_t h = home_of(g, home);

    if (*classify_cmd) {
      try {
        GroupDescriptor d = twist::classify(g, h, cap);
        if (json)
          std::cout << descriptor_to_json(g, d).dump(2) << "\n";
        else
          print_descriptor(g, d);
        return 0;
      } catch (const Undecided &e) {
        if (json)
          std::cout << Json{{"undecided", true}, {"reason", e.what()}}.dump(2) << "\n";
        else
          std::cout << "undecided: " << e.what() << "\n";
        return kUndecided;
      }
    }
    if (*check) {
      PuzzleState s = parse_twist_state(g, slurp(state_path), h);
      try {
        GroupDescriptor d = twist::classify(g, h);
        bool ok = is_solvable(d, g, s);
        if (json)
          std::cout << Json{{"solvable", ok}, {"case", to_string(d.kind)}}.dump(2) << "\n";
        else
          std::cout << (ok ? "solvable" : "unsolvable") << " (" << to_string(d.kind) << ")\n";
        return ok ? 0 : kUnsolvable;
      } catch (const Undecided &e) {
        std::cout << "undecided: " << e.what() << "\n";
        return kUndecided;
      }
    }
    if (*solve_cmd) {
      PuzzleState s = parse_twist_state(g, slurp(state_path), h);
      try {
        SolveResult r = twist::solve(g, s, h, cap);
        Json doc{{"status", to_string(r.status)}, {"explored", r.explored}};
        if (r.status == SolveStatus::Solved)
          doc["moves"] = moves_to_json(g, r.moves);
        std::cout << doc.dump(2) << "\n";
        switch (r.status) {
        case SolveStatus::Solved: return 0;
        case SolveStatus::Unsolvable: return kUnsolvable;
        case SolveStatus::CapExceeded: return kUndecided;
        }
      } catch (const Undecided &e) {
        std::cout << Json{{"status", "undecided"}, {"reason", e.what()}}.dump(2) << "\n";
        return kUndecided;
      }
    }
    if (*enumerate) {
      if (!state_keyable(g)) {
        std::cout << Json{{"undecided", true}, {"reason", "board too large to enumerate"}}.dump(2)
                  << "\n";
        return kUndecided;
      }
      ReachableSet r = enumerate_reachable(g, solved_state(g, h), cap, h);
      std::cout << reachable_to_json(g, r).dump(2) << "\n";
      return r.exhausted ? 0 : kUndecided;
    }
    if (*verify) {
      VerifyReport r = verify_classifier(g, h, cap);
      std::cout << verify_to_json(r).dump(2) << "\n";
      return r.undecided ? kUndecided : (r.agree ? 0 : kUnsolvable);
    }
    if (*scramble_cmd) {
      PuzzleState s = state_path.empty() ? solved_state(g, h)
                                         : parse_twist_state(g, slurp(state_path), h);
      emit(serialize_twist_state(g, scramble(g, s, steps, seed)), out);
      return 0;
    }
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
