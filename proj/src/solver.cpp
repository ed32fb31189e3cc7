#include "twist/solver.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "twist/oracle.hpp"

namespace twist {

namespace {

struct Visit {
  PackedKey parent;
  std::optional<Traversal> via;   // move from parent to this state
  std::size_t depth = 0;
};

using VisitMap = std::unordered_map<PackedKey, Visit, PackedKeyHash>;

// Moves from the side's root to `key`, in root-to-key order.
std::vector<Traversal> trace(const VisitMap &side, PackedKey key) {
  std::vector<Traversal> out;
  for (auto it = side.find(key); it->second.via; it = side.find(it->second.parent))
    out.push_back(*it->second.via);
  std::reverse(out.begin(), out.end());
  return out;
}

} // namespace

std::string_view to_string(SolveStatus s) {
  switch (s) {
  case SolveStatus::Solved: return "solved";
  case SolveStatus::Unsolvable: return "unsolvable";
  case SolveStatus::CapExceeded: return "cap-exceeded";
  }
  return "?";
}

SolveResult solve(const GroupDescriptor &d, const TwistGraph &g, const PuzzleState &s,
                  std::size_t cap) {
  SolveResult result;
  if (!is_solvable(d, g, s)) {
    result.status = SolveStatus::Unsolvable;
    return result;
  }
  const std::size_t home = d.home;
  if (is_solved(s, home)) {
    result.status = SolveStatus::Solved;
    return result;
  }
  if (!state_keyable(g))
    return result;

  const PuzzleState goal = solved_state(g, home);
  VisitMap sides[2];
  std::vector<PuzzleState> frontier[2] = {{s}, {goal}};
  const PackedKey roots[2] = {state_key(g, s, home), state_key(g, goal, home)};
  for (int i = 0; i < 2; ++i)
    sides[i].emplace(roots[i], Visit{roots[i], std::nullopt, 0});

  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    VisitMap &mine = sides[side];
    const VisitMap &other = sides[1 - side];
    std::vector<PuzzleState> next;
    std::optional<std::pair<std::size_t, PackedKey>> best;
    for (const PuzzleState &cur : frontier[side]) {
      const PackedKey ck = state_key(g, cur, home);
      const std::size_t depth = mine.at(ck).depth + 1;
      for (Traversal t : legal_moves(g, cur)) {
        PuzzleState nxt = apply_move(g, cur, t);
        PackedKey nk = state_key(g, nxt, home);
        if (mine.contains(nk))
          continue;
        mine.emplace(nk, Visit{ck, t, depth});
        if (auto hit = other.find(nk); hit != other.end()) {
          std::pair<std::size_t, PackedKey> cand{depth + hit->second.depth, nk};
          if (!best || cand < *best)
            best = cand;
        }
        next.push_back(std::move(nxt));
      }
    }
    result.explored = sides[0].size() + sides[1].size();
    if (best) {
      auto forward = trace(sides[0], best->second);
      auto backward = trace(sides[1], best->second);
      for (auto it = backward.rbegin(); it != backward.rend(); ++it)
        forward.push_back(it->reversed());
      result.status = SolveStatus::Solved;
      result.moves = std::move(forward);
      return result;
    }
    if (result.explored > cap)
      return result;
    frontier[side] = std::move(next);
  }
  // Unreachable for a solvable state; report the budget as exhausted.
  return result;
}

SolveResult solve(const TwistGraph &g, const PuzzleState &s, std::size_t home,
                  std::size_t cap) {
  return solve(classify(g, home, cap), g, s, cap);
}

bool verify_solution(const TwistGraph &g, const PuzzleState &s,
                     const std::vector<Traversal> &moves, std::size_t home) {
  try {
    check_state(g, s, home);
    return is_solved(apply_moves(g, s, moves), home);
  } catch (const std::invalid_argument &) {
    return false;
  }
}

} // namespace twist
