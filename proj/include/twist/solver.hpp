#ifndef TWIST_SOLVER_HPP
#define TWIST_SOLVER_HPP

#include <cstddef>
#include <vector>

#include "twist/classifier.hpp"
#include "twist/dynamics.hpp"
#include "twist/graph.hpp"

namespace twist {

enum class SolveStatus { Solved, Unsolvable, CapExceeded };
std::string_view to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::CapExceeded;
  std::vector<Traversal> moves;   // when Solved: a shortest sequence
  std::size_t explored = 0;       // states stored on both sides
};

/// Checks solvability first, then meets in the middle with layer-by-layer
/// bidirectional BFS. Among shortest meetings the smallest meeting-state key
/// wins, so the answer is deterministic. `cap` bounds the stored states.
SolveResult solve(const GroupDescriptor &d, const TwistGraph &g, const PuzzleState &s,
                  std::size_t cap = kDefaultCap);
SolveResult solve(const TwistGraph &g, const PuzzleState &s, std::size_t home,
                  std::size_t cap = kDefaultCap);

/// Every step legal in order and the final state solved.
bool verify_solution(const TwistGraph &g, const PuzzleState &s,
                     const std::vector<Traversal> &moves, std::size_t home);

} // namespace twist

#endif
