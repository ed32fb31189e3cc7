#include "twist/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include <json.hpp>

namespace twist {

namespace {

using Kind = GraphError::Kind;

Residue normalize(std::int64_t v, int m) {
  std::int64_t r = v % m;
  return static_cast<Residue>(r < 0 ? r + m : r);
}

// Parent-pointer walk between two vertices of a BFS forest.
std::vector<Traversal> forest_path(const TwistGraph &g,
                                   const std::vector<std::optional<Traversal>> &parent,
                                   const std::vector<std::size_t> &depth, std::size_t a,
                                   std::size_t b) {
  std::vector<Traversal> up_from_a;   // a -> lca, as traversals child -> parent
  std::vector<Traversal> down_to_b;   // lca -> b, collected reversed
  while (depth[a] > depth[b]) {
    up_from_a.push_back(parent[a]->reversed());
    a = g.from(*parent[a]);
  }
  while (depth[b] > depth[a]) {
    down_to_b.push_back(*parent[b]);
    b = g.from(*parent[b]);
  }
  while (a != b) {
    up_from_a.push_back(parent[a]->reversed());
    a = g.from(*parent[a]);
    down_to_b.push_back(*parent[b]);
    b = g.from(*parent[b]);
  }
  std::reverse(down_to_b.begin(), down_to_b.end());
  up_from_a.insert(up_from_a.end(), down_to_b.begin(), down_to_b.end());
  return up_from_a;
}

// 2-coloring by BFS where crossing an edge flips the color iff flips(t).
// On conflict returns a closed walk whose flip count is odd.
template <typename Flips>
std::pair<std::vector<int>, std::vector<Traversal>>
constrained_coloring(const TwistGraph &g, Flips flips) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::optional<Traversal>> parent(n);
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != -1)
      continue;
    color[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (Traversal t : g.leaving(u)) {
        std::size_t w = g.to(t);
        int want = color[u] ^ (flips(t) ? 1 : 0);
        if (color[w] == -1) {
          color[w] = want;
          parent[w] = t;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] != want) {
          auto cycle = forest_path(g, parent, depth, w, u);
          cycle.push_back(t);
          return {{}, cycle};
        }
      }
    }
  }
  return {color, {}};
}

} // namespace

const std::vector<std::vector<bool>> &theta5_reference() {
  // left, top, right, center, bottom
  static const auto ref = [] {
    std::vector<std::vector<bool>> a(5, std::vector<bool>(5, false));
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = true; };
    link(0, 1); link(1, 2); link(0, 3); link(3, 2); link(0, 4); link(4, 2);
    return a;
  }();
  return ref;
}

const std::vector<std::vector<bool>> &theta7_reference() {
  // inf, 0, 1, 2, 3, 4, center
  static const auto ref = [] {
    std::vector<std::vector<bool>> a(7, std::vector<bool>(7, false));
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = true; };
    for (int i = 0; i < 6; ++i)
      link(i, (i + 1) % 6);
    link(6, 0);
    link(6, 3);
    return a;
  }();
  return ref;
}


TwistGraph::TwistGraph(int m, std::vector<Vertex> vertices,
                       const std::vector<EdgeSpec> &edges,
                       std::optional<std::string> home)
    : m_(m), vertices_(std::move(vertices)) {
  if (m_ < 1)
    throw GraphError(Kind::BadModulus, "modulus must be at least 1");
  if (vertices_.empty())
    throw GraphError(Kind::Disconnected, "graph has no vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_ids_.emplace(vertices_[i].id, i).second)
      throw GraphError(Kind::DuplicateId, "duplicate vertex id '" + vertices_[i].id + "'");
  }
  for (const auto &spec : edges) {
    auto tail = find_vertex(spec.tail);
    auto head = find_vertex(spec.head);
    if (!tail || !head)
      throw GraphError(Kind::UnknownVertex,
                       "edge '" + spec.id + "' references an unknown vertex");
    if (*tail == *head)
      throw GraphError(Kind::Loop, "edge '" + spec.id + "' is a loop");
    if (!edge_ids_.emplace(spec.id, edges_.size()).second)
      throw GraphError(Kind::DuplicateId, "duplicate edge id '" + spec.id + "'");
    edges_.push_back({spec.id, *tail, *head, normalize(spec.twist, m_)});
  }
  if (home) {
    auto h = find_vertex(*home);
    if (!h)
      throw GraphError(Kind::UnknownVertex, "home '" + *home + "' is not a vertex");
    home_ = *h;
  }
  index();

  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (Traversal t : leaving_[u]) {
      std::size_t w = to(t);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertices_.size())
    throw GraphError(Kind::Disconnected, "graph is not connected");
}

void TwistGraph::index() {
  leaving_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    leaving_[edges_[e].tail].push_back({e, true});
    leaving_[edges_[e].head].push_back({e, false});
  }
}

std::optional<std::size_t> TwistGraph::find_vertex(std::string_view id) const {
  auto it = vertex_ids_.find(std::string(id));
  if (it == vertex_ids_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> TwistGraph::find_edge(std::string_view id) const {
  auto it = edge_ids_.find(std::string(id));
  if (it == edge_ids_.end())
    return std::nullopt;
  return it->second;
}

std::size_t TwistGraph::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id))
    return *v;
  throw GraphError(Kind::UnknownVertex, "unknown vertex '" + std::string(id) + "'");
}

std::size_t TwistGraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id))
    return *e;
  throw GraphError(Kind::UnknownVertex, "unknown edge '" + std::string(id) + "'");
}

std::size_t TwistGraph::from(Traversal t) const {
  const Edge &e = edges_[t.edge];
  return t.forward ? e.tail : e.head;
}

std::size_t TwistGraph::to(Traversal t) const {
  const Edge &e = edges_[t.edge];
  return t.forward ? e.head : e.tail;
}

Residue TwistGraph::twist(Traversal t) const {
  Residue g = edges_[t.edge].twist;
  if (t.forward || g == 0)
    return g;
  return static_cast<Residue>(m_) - g;
}

std::string TwistGraph::traversal_name(Traversal t) const {
  return edges_[t.edge].id + (t.forward ? "+" : "-");
}

Traversal TwistGraph::parse_traversal(std::string_view text) const {
  if (text.size() < 2 || (text.back() != '+' && text.back() != '-'))
    throw GraphError(Kind::Syntax, "bad move '" + std::string(text) +
                                       "' (expected <edge-id>+ or <edge-id>-)");
  auto e = find_edge(text.substr(0, text.size() - 1));
  if (!e)
    throw GraphError(Kind::UnknownVertex, "move '" + std::string(text) +
                                              "' names an unknown edge");
  return {*e, text.back() == '+'};
}

TwistGraph TwistGraph::with_twists(int m, const std::vector<std::int64_t> &twists) const {
  if (twists.size() != edges_.size())
    throw std::invalid_argument("twist vector length does not match edge count");
  std::vector<EdgeSpec> specs;
  specs.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e)
    specs.push_back({edges_[e].id, vertices_[edges_[e].tail].id,
                     vertices_[edges_[e].head].id, twists[e]});
  std::optional<std::string> home;
  if (home_)
    home = vertices_[*home_].id;
  return TwistGraph(m, vertices_, specs, home);
}

TwistGraph TwistGraph::with_home(std::size_t v) const {
  TwistGraph copy = *this;
  copy.home_ = v;
  return copy;
}

bool operator==(const TwistGraph &a, const TwistGraph &b) {
  if (a.m_ != b.m_ || a.home_ != b.home_ || a.vertices_.size() != b.vertices_.size() ||
      a.edges_.size() != b.edges_.size())
    return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const auto &u = a.vertices_[i];
    const auto &v = b.vertices_[i];
    if (u.id != v.id || u.x != v.x || u.y != v.y)
      return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto &e = a.edges_[i];
    const auto &f = b.edges_[i];
    if (e.id != f.id || e.tail != f.tail || e.head != f.head || e.twist != f.twist)
      return false;
  }
  return true;
}

TwistGraph parse_twist_graph(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw GraphError(Kind::Syntax, std::string("malformed JSON: ") + e.what());
  }
  auto require = [](bool ok, const std::string &msg) {
    if (!ok)
      throw GraphError(Kind::Syntax, msg);
  };
  auto only_keys = [](const json &obj, std::initializer_list<const char *> keys,
                      const std::string &where) {
    for (const auto &[k, _] : obj.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char *a) { return k == a; }))
        throw GraphError(Kind::UnknownKey, "unknown key '" + k + "' in " + where);
    }
  };
  require(doc.is_object(), "document must be a JSON object");
  only_keys(doc, {"format", "m", "vertices", "edges", "home"}, "graph");
  require(doc.contains("format") && doc["format"] == "twistgraph/1",
          "format must be \"twistgraph/1\"");
  require(doc.contains("m") && doc["m"].is_number_integer(), "m must be an integer");
  const std::int64_t m = doc["m"].get<std::int64_t>();
  if (m < 1 || m > 1'000'000)
    throw GraphError(Kind::BadModulus, "m must be a positive integer");
  require(doc.contains("vertices") && doc["vertices"].is_array(),
          "vertices must be an array");
  require(doc.contains("edges") && doc["edges"].is_array(), "edges must be an array");

  std::vector<Vertex> vertices;
  for (const auto &v : doc["vertices"]) {
    require(v.is_object(), "vertex entries must be objects");
    only_keys(v, {"id", "x", "y"}, "vertex");
    require(v.contains("id") && v["id"].is_string(), "vertex id must be a string");
    Vertex out{v["id"].get<std::string>(), std::nullopt, std::nullopt};
    for (const char *axis : {"x", "y"}) {
      if (!v.contains(axis) || v[axis].is_null())
        continue;
      require(v[axis].is_number(), std::string("vertex ") + axis + " must be a number");
      (axis[0] == 'x' ? out.x : out.y) = v[axis].get<double>();
    }
    vertices.push_back(std::move(out));
  }
  std::vector<EdgeSpec> edges;
  for (const auto &e : doc["edges"]) {
    require(e.is_object(), "edge entries must be objects");
    only_keys(e, {"id", "tail", "head", "twist"}, "edge");
    require(e.contains("id") && e["id"].is_string(), "edge id must be a string");
    require(e.contains("tail") && e["tail"].is_string(), "edge tail must be a vertex id");
    require(e.contains("head") && e["head"].is_string(), "edge head must be a vertex id");
    require(e.contains("twist") && e["twist"].is_number_integer(),
            "edge twist must be an integer");
    std::int64_t twist = e["twist"].get<std::int64_t>();
    if (twist < 0 || twist >= m)
      throw GraphError(Kind::BadTwist, "twist of edge '" + e["id"].get<std::string>() +
                                           "' lies outside [0, m)");
    edges.push_back({e["id"].get<std::string>(), e["tail"].get<std::string>(),
                     e["head"].get<std::string>(), twist});
  }
  std::optional<std::string> home;
  if (doc.contains("home") && !doc["home"].is_null()) {
    require(doc["home"].is_string(), "home must be a vertex id");
    home = doc["home"].get<std::string>();
  }
  return TwistGraph(static_cast<int>(m), std::move(vertices), edges, home);
}

std::string serialize_twist_graph(const TwistGraph &g) {
  nlohmann::ordered_json doc;
  doc["format"] = "twistgraph/1";
  doc["m"] = g.modulus();
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto &v : g.vertices()) {
    nlohmann::ordered_json jv;
    jv["id"] = v.id;
    if (v.x)
      jv["x"] = *v.x;
    if (v.y)
      jv["y"] = *v.y;
    doc["vertices"].push_back(jv);
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto &e : g.edges()) {
    doc["edges"].push_back({{"id", e.id},
                            {"tail", g.vertex(e.tail).id},
                            {"head", g.vertex(e.head).id},
                            {"twist", e.twist}});
  }
  if (g.has_home())
    doc["home"] = g.vertex(g.home()).id;
  return doc.dump(2) + "\n";
}

std::string_view to_string(CollapseClass c) {
  switch (c) {
  case CollapseClass::Cycle:
    return "cycle";
  case CollapseClass::Theta5:
    return "theta5";
  case CollapseClass::Theta7:
    return "theta7";
  case CollapseClass::Other:
    break;
  }
  return "other";
}

std::vector<std::vector<bool>> simple_adjacency(const TwistGraph &g) {
  std::vector<std::vector<bool>> adj(g.vertex_count(),
                                     std::vector<bool>(g.vertex_count(), false));
  for (const auto &e : g.edges())
    adj[e.tail][e.head] = adj[e.head][e.tail] = true;
  return adj;
}

std::optional<std::vector<std::size_t>>
match_reference(const TwistGraph &g, const std::vector<std::vector<bool>> &reference) {
  const std::size_t n = reference.size();
  if (g.vertex_count() != n || n > 9)
    return std::nullopt;
  auto adj = simple_adjacency(g);
  auto degrees = [n](const std::vector<std::vector<bool>> &a) {
    std::vector<std::size_t> d(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      d[i] = static_cast<std::size_t>(std::count(a[i].begin(), a[i].end(), true));
    return d;
  };
  auto dg = degrees(adj);
  auto dr = degrees(reference);
  auto sg = dg, sr = dr;
  std::sort(sg.begin(), sg.end());
  std::sort(sr.begin(), sr.end());
  if (sg != sr)
    return std::nullopt;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (dr[i] != dg[perm[i]]) {
        ok = false;
        break;
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (reference[i][j] != adj[perm[i]][perm[j]]) {
          ok = false;
          break;
        }
      }
    }
    if (ok)
      return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

ValidationReport validate(const TwistGraph &g) {
  ValidationReport r;
  const std::size_t n = g.vertex_count();
  r.loop_free = std::all_of(g.edges().begin(), g.edges().end(),
                            [](const Edge &e) { return e.tail != e.head; });

  // Connectivity and articulation points (Tarjan, skipping the parent edge
  // by edge index so parallel edges count as back edges).
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;
  std::function<void(std::size_t, std::optional<std::size_t>)> dfs =
      [&](std::size_t u, std::optional<std::size_t> via) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (Traversal t : g.leaving(u)) {
          if (via && t.edge == *via)
            continue;
          std::size_t w = g.to(t);
          if (disc[w] == -1) {
            ++children;
            dfs(w, t.edge);
            low[u] = std::min(low[u], low[w]);
            if (via && low[w] >= disc[u])
              cut[u] = true;
          } else {
            low[u] = std::min(low[u], disc[w]);
          }
        }
        if (!via && children > 1)
          cut[u] = true;
      };
  dfs(0, std::nullopt);
  r.connected = std::none_of(disc.begin(), disc.end(), [](int d) { return d == -1; });
  for (std::size_t v = 0; v < n; ++v)
    if (cut[v])
      r.articulation_points.push_back(v);
  r.two_vertex_connected = r.connected && n >= 3 && r.articulation_points.empty();

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto &e : g.edges()) {
    auto key = std::minmax(e.tail, e.head);
    if (!pairs.insert(key).second)
      r.has_parallel_edges = true;
  }

  auto adj = simple_adjacency(g);
  bool degree_two = n >= 3;
  for (std::size_t v = 0; v < n && degree_two; ++v)
    degree_two = std::count(adj[v].begin(), adj[v].end(), true) == 2;
  if (degree_two && r.connected)
    r.simple_collapse_class = CollapseClass::Cycle;
  else if (match_reference(g, theta5_reference()))
    r.simple_collapse_class = CollapseClass::Theta5;
  else if (match_reference(g, theta7_reference()))
    r.simple_collapse_class = CollapseClass::Theta7;
  r.is_cycle = r.simple_collapse_class == CollapseClass::Cycle && !r.has_parallel_edges;
  r.is_multi_cycle = r.simple_collapse_class == CollapseClass::Cycle && r.has_parallel_edges;
  return r;
}

BipartiteResult is_bipartite(const TwistGraph &g) {
  auto [coloring, cycle] = constrained_coloring(g, [](Traversal) { return true; });
  BipartiteResult r;
  r.value = cycle.empty();
  if (r.value) {
    r.coloring = std::move(coloring);
  } else {
    r.odd_cycle.push_back(g.from(cycle.front()));
    for (Traversal t : cycle)
      r.odd_cycle.push_back(g.to(t));
  }
  return r;
}

TwistBipartiteResult is_twist_bipartite(const TwistGraph &g) {
  TwistBipartiteResult r;
  if (g.modulus() % 2 != 0)
    return r;
  auto [coloring, cycle] =
      constrained_coloring(g, [&](Traversal t) { return g.twist(t) % 2 == 0; });
  r.value = cycle.empty();
  if (r.value)
    r.coloring = std::move(coloring);
  else
    r.violating_cycle = std::move(cycle);
  return r;
}

TwistGraph gauge_transform(const TwistGraph &g, const Gauge &gauge) {
  if (gauge.psi.size() != g.vertex_count())
    throw std::invalid_argument("gauge must be defined on every vertex");
  std::vector<std::int64_t> twists;
  twists.reserve(g.edge_count());
  for (const auto &e : g.edges())
    twists.push_back(static_cast<std::int64_t>(e.twist) + gauge.psi[e.tail] -
                     static_cast<std::int64_t>(gauge.psi[e.head]));
  return g.with_twists(g.modulus(), twists);
}

SpanningTree canonical_spanning_tree(const TwistGraph &g) {
  const std::size_t n = g.vertex_count();
  SpanningTree t;
  auto adj = simple_adjacency(g);
  std::size_t best = 0;
  std::ptrdiff_t best_degree = -1;
  for (std::size_t v = 0; v < n; ++v) {
    auto d = std::count(adj[v].begin(), adj[v].end(), true);
    if (d > best_degree) {
      best_degree = d;
      best = v;
    }
  }
  t.root = best;
  t.parent.assign(n, std::nullopt);
  t.depth.assign(n, 0);
  t.in_tree.assign(g.edge_count(), false);
  std::vector<bool> seen(n, false);
  seen[t.root] = true;
  std::deque<std::size_t> queue{t.root};
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    t.order.push_back(u);
    for (Traversal tr : g.leaving(u)) {
      std::size_t w = g.to(tr);
      if (seen[w])
        continue;
      seen[w] = true;
      t.parent[w] = tr;
      t.depth[w] = t.depth[u] + 1;
      t.in_tree[tr.edge] = true;
      queue.push_back(w);
    }
  }
  return t;
}

std::vector<Traversal> tree_path(const TwistGraph &g, const SpanningTree &t,
                                 std::size_t a, std::size_t b) {
  return forest_path(g, t.parent, t.depth, a, b);
}

Reduction normalize_and_reduce(const TwistGraph &g) {
  const int m = g.modulus();
  SpanningTree tree = canonical_spanning_tree(g);
  Reduction r;
  r.gauge.psi.assign(g.vertex_count(), 0);
  for (std::size_t v : tree.order) {
    if (!tree.parent[v])
      continue;
    Traversal t = *tree.parent[v];
    r.gauge.psi[v] = static_cast<Residue>((r.gauge.psi[g.from(t)] + g.twist(t)) % m);
  }
  r.normalized = gauge_transform(g, r.gauge);
  int d = m;
  for (const auto &e : r.normalized.edges())
    d = std::gcd(d, static_cast<int>(e.twist));
  r.d = d;
  std::vector<std::int64_t> twists;
  for (const auto &e : r.normalized.edges())
    twists.push_back(static_cast<std::int64_t>(e.twist) / d);
  r.reduced = r.normalized.with_twists(m / d, twists);
  return r;
}

} // namespace twist
