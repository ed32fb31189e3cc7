#include "twist/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "twist/io.hpp"

namespace twist {

namespace {

Residue add_mod(Residue a, std::int64_t b, int m) {
  std::int64_t r = (static_cast<std::int64_t>(a) + b) % m;
  return static_cast<Residue>(r < 0 ? r + m : r);
}

// Single-edge generator (x(e), sigma_e) on the full vertex set.
GroupElement edge_element(const TwistGraph &g, const SiteList &all, Traversal t) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0u);
  std::size_t a = g.from(t), b = g.to(t);
  std::swap(sigma[a], sigma[b]);
  std::vector<std::int64_t> x(n, 0);
  x[a] = g.twist(t);
  return GroupElement(g.modulus(), all, std::move(sigma), std::move(x));
}

} // namespace

PuzzleState solved_state(const TwistGraph &g, std::size_t home) {
  const std::size_t n = g.vertex_count();
  if (home >= n)
    throw StateError("home vertex out of range");
  PuzzleState s;
  s.blank = home;
  s.tile_at.resize(n);
  std::iota(s.tile_at.begin(), s.tile_at.end(), 0u);
  s.tile_at[home] = PuzzleState::kNoTile;
  s.rot.assign(n, 0);
  return s;
}

void check_state(const TwistGraph &g, const PuzzleState &s, std::size_t home) {
  const std::size_t n = g.vertex_count();
  if (home >= n)
    throw StateError("home vertex out of range");
  if (s.tile_at.size() != n || s.rot.size() != n)
    throw StateError("state does not match the graph's vertex count");
  if (s.blank >= n)
    throw StateError("blank is not a vertex");
  if (s.tile_at[s.blank] != PuzzleState::kNoTile || s.rot[s.blank] != 0)
    throw StateError("blank position holds a tile");
  std::vector<bool> seen(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == s.blank)
      continue;
    std::uint32_t t = s.tile_at[v];
    if (t >= n || t == home || seen[t])
      throw StateError("tile placement is not a bijection onto the non-blank vertices");
    seen[t] = true;
    if (s.rot[v] >= static_cast<Residue>(g.modulus()))
      throw StateError("rotation outside [0, m)");
  }
}

bool is_solved(const PuzzleState &s, std::size_t home) {
  if (s.blank != home)
    return false;
  for (std::size_t v = 0; v < s.tile_at.size(); ++v) {
    if (v == home)
      continue;
    if (s.tile_at[v] != v || s.rot[v] != 0)
      return false;
  }
  return true;
}

PuzzleState swap_tiles(const PuzzleState &s, std::size_t a, std::size_t b) {
  if (a == s.blank || b == s.blank)
    throw StateError("cannot swap the blank");
  PuzzleState out = s;
  std::swap(out.tile_at[a], out.tile_at[b]);
  std::swap(out.rot[a], out.rot[b]);
  return out;
}

PuzzleState rotate_tile(const TwistGraph &g, const PuzzleState &s, std::size_t v,
                        std::int64_t delta) {
  if (v == s.blank)
    throw StateError("cannot rotate the blank");
  PuzzleState out = s;
  out.rot[v] = add_mod(out.rot[v], delta, g.modulus());
  return out;
}

std::vector<Traversal> legal_moves(const TwistGraph &g, const PuzzleState &s) {
  return g.leaving(s.blank);
}

PuzzleState apply_move(const TwistGraph &g, const PuzzleState &s, Traversal t) {
  if (t.edge >= g.edge_count() || g.from(t) != s.blank)
    throw IllegalMove("move does not start at the blank");
  PuzzleState out = s;
  const std::size_t tail = g.from(t), head = g.to(t);
  out.tile_at[tail] = s.tile_at[head];
  out.rot[tail] = add_mod(s.rot[head], g.twist(t), g.modulus());
  out.tile_at[head] = PuzzleState::kNoTile;
  out.rot[head] = 0;
  out.blank = head;
  return out;
}

PuzzleState apply_moves(const TwistGraph &g, PuzzleState s,
                        const std::vector<Traversal> &moves) {
  for (Traversal t : moves)
    s = apply_move(g, s, t);
  return s;
}

SiteList home_sites(const TwistGraph &g, std::size_t home) {
  std::vector<std::string> labels;
  labels.reserve(g.vertex_count() - 1);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (v != home)
      labels.push_back(g.vertex(v).id);
  return make_sites(std::move(labels));
}

GroupElement element_of_path(const TwistGraph &g, const ClosedPath &p) {
  std::vector<std::string> labels;
  for (const auto &v : g.vertices())
    labels.push_back(v.id);
  SiteList all = make_sites(std::move(labels));
  GroupElement acc = GroupElement::identity(g.modulus(), all);
  for (Traversal t : p.steps())
    acc = gs_multiply(edge_element(g, all, t), acc);

  // The blank is back at the base, so the base is fixed and carries 0.
  const std::size_t base = p.base();
  std::vector<std::uint32_t> local(g.vertex_count());
  for (std::size_t v = 0, k = 0; v < g.vertex_count(); ++v)
    local[v] = v == base ? PuzzleState::kNoTile : static_cast<std::uint32_t>(k++);
  std::vector<std::uint32_t> sigma;
  std::vector<std::int64_t> x;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == base)
      continue;
    sigma.push_back(local[acc.sigma(v)]);
    x.push_back(acc.x(v));
  }
  return GroupElement(g.modulus(), home_sites(g, base), std::move(sigma), std::move(x));
}

GroupElement state_to_element(const TwistGraph &g, const PuzzleState &s,
                              std::size_t home, const SiteList &sites) {
  if (s.blank != home)
    throw StateError("blank is not at home");
  const std::size_t n = g.vertex_count();
  auto local = [home](std::size_t v) { return static_cast<std::uint32_t>(v < home ? v : v - 1); };
  std::vector<std::uint32_t> sigma(n - 1);
  std::vector<std::int64_t> x(n - 1);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == home)
      continue;
    sigma[local(s.tile_at[v])] = local(v);
    x[local(v)] = s.rot[v];
  }
  return GroupElement(g.modulus(), sites, std::move(sigma), std::move(x));
}

GroupElement state_to_element(const TwistGraph &g, const PuzzleState &s,
                              std::size_t home) {
  return state_to_element(g, s, home, home_sites(g, home));
}

PuzzleState element_to_state(const TwistGraph &g, const GroupElement &e,
                             std::size_t home) {
  const std::size_t n = g.vertex_count();
  if (e.size() + 1 != n || e.modulus() != g.modulus())
    throw StateError("element does not belong to this board");
  auto global = [home](std::size_t i) { return i < home ? i : i + 1; };
  PuzzleState s = solved_state(g, home);
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::size_t pos = global(e.sigma(i));
    s.tile_at[pos] = static_cast<std::uint32_t>(global(i));
    s.rot[pos] = e.x(e.sigma(i));
  }
  return s;
}

std::vector<Traversal> shortest_walk(const TwistGraph &g, std::size_t from,
                                     std::size_t to) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Traversal>> via(n);
  std::vector<bool> seen(n, false);
  seen[from] = true;
  std::deque<std::size_t> queue{from};
  while (!queue.empty() && !seen[to]) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (Traversal t : g.leaving(u)) {
      std::size_t w = g.to(t);
      if (seen[w])
        continue;
      seen[w] = true;
      via[w] = t;
      queue.push_back(w);
    }
  }
  std::vector<Traversal> walk;
  for (std::size_t v = to; v != from; v = g.from(*via[v]))
    walk.push_back(*via[v]);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

PuzzleState transport_blank_home(const TwistGraph &g, const PuzzleState &s,
                                 std::size_t home) {
  return apply_moves(g, s, shortest_walk(g, s.blank, home));
}

std::vector<Traversal> scramble_moves(const TwistGraph &g, const PuzzleState &s,
                                      std::size_t steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Traversal> moves;
  PuzzleState cur = s;
  std::optional<Traversal> last;
  for (std::size_t i = 0; i < steps; ++i) {
    auto options = legal_moves(g, cur);
    if (last && options.size() > 1) {
      auto undo = last->reversed();
      std::erase(options, undo);
    }
    Traversal t = options[rng() % options.size()];
    cur = apply_move(g, cur, t);
    moves.push_back(t);
    last = t;
  }
  return moves;
}

PuzzleState scramble(const TwistGraph &g, const PuzzleState &s, std::size_t steps,
                     std::uint64_t seed) {
  return apply_moves(g, s, scramble_moves(g, s, steps, seed));
}

PuzzleState gauge_state(const TwistGraph &g, const PuzzleState &s, const Gauge &gauge) {
  PuzzleState out = s;
  for (std::size_t v = 0; v < s.tile_at.size(); ++v) {
    if (v == s.blank)
      continue;
    std::int64_t delta = static_cast<std::int64_t>(gauge.psi[v]) -
                         static_cast<std::int64_t>(gauge.psi[s.tile_at[v]]);
    out.rot[v] = add_mod(s.rot[v], delta, g.modulus());
  }
  return out;
}

PuzzleState parse_twist_state(const TwistGraph &g, std::string_view text,
                              std::size_t home) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw StateError(std::string("malformed JSON: ") + e.what());
  }
  return state_from_json(g, doc, home);
}

std::string serialize_twist_state(const TwistGraph &g, const PuzzleState &s) {
  return state_to_json(g, s).dump(2) + "\n";
}

std::vector<std::string> move_names(const TwistGraph &g,
                                    const std::vector<Traversal> &moves) {
  std::vector<std::string> out;
  out.reserve(moves.size());
  for (Traversal t : moves)
    out.push_back(g.traversal_name(t));
  return out;
}

std::vector<Traversal> parse_moves(const TwistGraph &g,
                                   const std::vector<std::string> &names) {
  std::vector<Traversal> out;
  out.reserve(names.size());
  for (const auto &n : names)
    out.push_back(g.parse_traversal(n));
  return out;
}

} // namespace twist
