#ifndef TWIST_DYNAMICS_HPP
#define TWIST_DYNAMICS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twist/graph.hpp"
#include "twist/group.hpp"
#include "twist/topology.hpp"

namespace twist {

class StateError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class IllegalMove : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A live board. Tiles are named by their home vertex; the blank's home is
/// the one vertex that names no tile. rot[v] is the rotation of the tile on
/// v measured in v's frame; tile_at[blank] and rot[blank] are unused (kept
/// at kNoTile / 0).
struct PuzzleState {
  static constexpr std::uint32_t kNoTile = 0xFFFFFFFFu;

  std::size_t blank = 0;
  std::vector<std::uint32_t> tile_at;
  std::vector<Residue> rot;

  friend bool operator==(const PuzzleState &, const PuzzleState &) = default;
};

struct MoveSequence {
  std::size_t start_blank = 0;
  std::vector<Traversal> steps;
};

PuzzleState solved_state(const TwistGraph &g, std::size_t home);
/// Throws StateError unless s is a valid board for g with blank home `home`.
void check_state(const TwistGraph &g, const PuzzleState &s, std::size_t home);
bool is_solved(const PuzzleState &s, std::size_t home);

/// Pop-out edits: exchange the tiles on two positions / turn one tile in place.
PuzzleState swap_tiles(const PuzzleState &s, std::size_t a, std::size_t b);
PuzzleState rotate_tile(const TwistGraph &g, const PuzzleState &s, std::size_t v,
                        std::int64_t delta);

std::vector<Traversal> legal_moves(const TwistGraph &g, const PuzzleState &s);
/// The blank crosses t; the displaced tile travels the other way and its
/// rotation grows by twist(t). Throws IllegalMove unless from(t) == blank.
PuzzleState apply_move(const TwistGraph &g, const PuzzleState &s, Traversal t);
/// Replays moves; throws IllegalMove at the first step that does not start
/// at the blank.
PuzzleState apply_moves(const TwistGraph &g, PuzzleState s,
                        const std::vector<Traversal> &moves);

/// Non-home vertices in vertex order: the site list of S(m, n) at `home`.
SiteList home_sites(const TwistGraph &g, std::size_t home);

/// (x(e_k), sigma_{e_k}) ... (x(e_1), sigma_{e_1}) in S(m, n) at p.base().
GroupElement element_of_path(const TwistGraph &g, const ClosedPath &p);

/// Blank-at-home state <-> group element. sigma maps tile home -> current site.
GroupElement state_to_element(const TwistGraph &g, const PuzzleState &s,
                              std::size_t home, const SiteList &sites);
GroupElement state_to_element(const TwistGraph &g, const PuzzleState &s,
                              std::size_t home);
PuzzleState element_to_state(const TwistGraph &g, const GroupElement &e,
                             std::size_t home);

/// Shortest blank walk between two vertices: BFS with edge-order tie-break.
std::vector<Traversal> shortest_walk(const TwistGraph &g, std::size_t from,
                                     std::size_t to);
PuzzleState transport_blank_home(const TwistGraph &g, const PuzzleState &s,
                                 std::size_t home);

/// Deterministic random walk of legal moves (std::mt19937_64 seeded with
/// `seed`). Immediate backtracking is avoided whenever another move exists.
PuzzleState scramble(const TwistGraph &g, const PuzzleState &s, std::size_t steps,
                     std::uint64_t seed);
std::vector<Traversal> scramble_moves(const TwistGraph &g, const PuzzleState &s,
                                      std::size_t steps, std::uint64_t seed);

/// Rewrite rotations into the frames of gauge_transform(g, gauge):
/// rot'[v] = rot[v] + psi[v] - psi[tile home].
PuzzleState gauge_state(const TwistGraph &g, const PuzzleState &s, const Gauge &gauge);

/// twiststate/1 documents.
PuzzleState parse_twist_state(const TwistGraph &g, std::string_view text,
                              std::size_t home);
std::string serialize_twist_state(const TwistGraph &g, const PuzzleState &s);

std::vector<std::string> move_names(const TwistGraph &g,
                                    const std::vector<Traversal> &moves);
std::vector<Traversal> parse_moves(const TwistGraph &g,
                                   const std::vector<std::string> &names);

} // namespace twist

#endif
