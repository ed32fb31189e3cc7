#ifndef TWIST_ORACLE_HPP
#define TWIST_ORACLE_HPP

// Exhaustive breadth-first enumeration of reachable states, used as ground
// truth for the classifier.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twist/classifier.hpp"
#include "twist/dynamics.hpp"
#include "twist/graph.hpp"
#include "twist/group.hpp"

namespace twist {

/// Whether every state of g fits a PackedKey: |V| <= 20 and m^(|V|-1) < 2^64.
bool state_keyable(const TwistGraph &g);

/// rank = Lehmer rank of the placement with the blank written as `home`;
/// digits = rotations of the non-blank positions in base m.
PackedKey state_key(const TwistGraph &g, const PuzzleState &s, std::size_t home);
PuzzleState state_from_key(const TwistGraph &g, PackedKey key, std::size_t home);

struct ReachableSet {
  std::vector<PackedKey> states;          // BFS visitation order
  std::vector<GroupElement> by_home;      // bridged blank-at-home states, same order
  std::vector<std::size_t> per_blank;     // visited states by blank position
  bool exhausted = false;
  std::size_t explored = 0;
};

/// BFS from start over apply_move. Stops after `cap` states (exhausted =
/// false). Throws std::invalid_argument when the board is not keyable.
ReachableSet enumerate_reachable(const TwistGraph &g, const PuzzleState &start,
                                 std::size_t cap, std::size_t home);

/// |V| * n! * m^n: every placement of the blank and tiles with every rotation.
BigInt full_space_size(const TwistGraph &g);

struct VerifyReport {
  bool undecided = false;
  bool agree = false;
  std::string reason;
  std::optional<GroupCase> kind;
  BigInt order = 0;
  std::size_t states = 0;
  std::size_t by_home = 0;
  std::vector<GroupElement> missing;  // accepted, never reached (first 10)
  std::vector<GroupElement> extra;    // reached, rejected (first 10)
};

/// Compare the reachable blank-at-home group against classify(g, home):
/// every reached element must be accepted and the counts must match.
/// Missing elements are listed when S(m, n) itself fits under the cap.
VerifyReport verify_classifier(const TwistGraph &g, std::size_t home,
                               std::size_t cap = kDefaultCap);

} // namespace twist

#endif
