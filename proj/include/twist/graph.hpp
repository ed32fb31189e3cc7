#ifndef TWIST_GRAPH_HPP
#define TWIST_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "twist/group.hpp"

namespace twist {

class GraphError : public std::invalid_argument {
public:
  enum class Kind {
    Syntax,
    UnknownKey,
    BadModulus,
    BadTwist,
    DuplicateId,
    UnknownVertex,
    Loop,
    Disconnected,
  };

  GraphError(Kind kind, const std::string &what)
      : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

struct Vertex {
  std::string id;
  std::optional<double> x;
  std::optional<double> y;
};

/// Twist is stored once, on the tail -> head orientation.
struct Edge {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;
  Residue twist = 0;
};

/// Input form of an edge, by vertex id.
struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
  std::int64_t twist = 0;
};

/// One oriented use of an edge. Serialized as "<edge-id>+" / "<edge-id>-".
struct Traversal {
  std::size_t edge = 0;
  bool forward = true;

  Traversal reversed() const { return {edge, !forward}; }
  friend bool operator==(const Traversal &, const Traversal &) = default;
};

class TwistGraph {
public:
  TwistGraph() = default;
  /// Validates every structural invariant; twists are reduced into [0, m).
  TwistGraph(int m, std::vector<Vertex> vertices, const std::vector<EdgeSpec> &edges,
             std::optional<std::string> home = std::nullopt);

  int modulus() const { return m_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex> &vertices() const { return vertices_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const Vertex &vertex(std::size_t v) const { return vertices_[v]; }
  const Edge &edge(std::size_t e) const { return edges_[e]; }

  /// Designated blank home, or vertex 0 when the document names none.
  std::size_t home() const { return home_.value_or(0); }
  bool has_home() const { return home_.has_value(); }

  std::size_t vertex_index(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;
  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;

  std::size_t from(Traversal t) const;
  std::size_t to(Traversal t) const;
  /// gamma_e forward, -gamma_e mod m backward.
  Residue twist(Traversal t) const;
  /// Traversals leaving v, in edge order.
  const std::vector<Traversal> &leaving(std::size_t v) const { return leaving_[v]; }

  std::string traversal_name(Traversal t) const;
  Traversal parse_traversal(std::string_view text) const;

  /// Same graph with a different modulus / twist vector (same edge order).
  TwistGraph with_twists(int m, const std::vector<std::int64_t> &twists) const;
  TwistGraph with_home(std::size_t v) const;

  friend bool operator==(const TwistGraph &a, const TwistGraph &b);

private:
  void index();

  int m_ = 1;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::optional<std::size_t> home_;
  std::unordered_map<std::string, std::size_t> vertex_ids_;
  std::unordered_map<std::string, std::size_t> edge_ids_;
  std::vector<std::vector<Traversal>> leaving_;
};

/// Parse a twistgraph/1 document.
TwistGraph parse_twist_graph(std::string_view text);
std::string serialize_twist_graph(const TwistGraph &g);

enum class CollapseClass { Cycle, Theta5, Theta7, Other };
std::string_view to_string(CollapseClass c);

struct ValidationReport {
  bool connected = false;
  bool two_vertex_connected = false;
  bool loop_free = false;
  bool is_cycle = false;
  bool is_multi_cycle = false;
  bool has_parallel_edges = false;
  CollapseClass simple_collapse_class = CollapseClass::Other;
  std::vector<std::size_t> articulation_points;
};

ValidationReport validate(const TwistGraph &g);

struct BipartiteResult {
  bool value = false;
  std::vector<int> coloring;            // per vertex, when value
  std::vector<std::size_t> odd_cycle;   // closed vertex walk, when !value
};

/// Ordinary bipartiteness of the underlying multigraph.
BipartiteResult is_bipartite(const TwistGraph &g);

struct TwistBipartiteResult {
  bool value = false;
  std::vector<int> coloring;                 // when value
  std::vector<Traversal> violating_cycle;    // odd number of even edges, when !value and m even
};

/// Even-twist edges cross colors, odd-twist edges stay inside one. False
/// whenever m is odd.
TwistBipartiteResult is_twist_bipartite(const TwistGraph &g);

/// Re-choice of each position's reference top.
struct Gauge {
  std::vector<Residue> psi;
};

/// gamma'_e = gamma_e + psi[tail] - psi[head].
TwistGraph gauge_transform(const TwistGraph &g, const Gauge &gauge);

/// BFS spanning tree rooted at a maximum-degree vertex (ties: lowest index).
struct SpanningTree {
  std::size_t root = 0;
  std::vector<std::optional<Traversal>> parent;   // traversal parent -> child
  std::vector<std::size_t> depth;
  std::vector<bool> in_tree;                      // per edge
  std::vector<std::size_t> order;                 // BFS visitation order
};

SpanningTree canonical_spanning_tree(const TwistGraph &g);

/// Tree path from a to b as traversals.
std::vector<Traversal> tree_path(const TwistGraph &g, const SpanningTree &t,
                                 std::size_t a, std::size_t b);

struct Reduction {
  Gauge gauge;
  TwistGraph normalized;
  int d = 1;
  TwistGraph reduced;
};

Reduction normalize_and_reduce(const TwistGraph &g);

/// Vertex adjacency of the multi-edge collapse.
std::vector<std::vector<bool>> simple_adjacency(const TwistGraph &g);

/// Collapse references: left, top, right, center, bottom and
/// inf, 0, 1, 2, 3, 4, center.
const std::vector<std::vector<bool>> &theta5_reference();
const std::vector<std::vector<bool>> &theta7_reference();

/// Vertex relabeling onto a reference graph (reference index -> g index), if
/// the multi-edge collapse of g is isomorphic to it.
std::optional<std::vector<std::size_t>>
match_reference(const TwistGraph &g, const std::vector<std::vector<bool>> &reference);

} // namespace twist

#endif
