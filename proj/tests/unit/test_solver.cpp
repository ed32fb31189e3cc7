#include <gtest/gtest.h>

#include <map>

#include "support/boards.hpp"
#include "twist/oracle.hpp"
#include "twist/solver.hpp"

using namespace twist;
using namespace twist::testing;

namespace {

// Distance to the solved state from every reachable state.
std::map<PackedKey, std::size_t> distances(const TwistGraph &g, std::size_t home) {
  std::map<PackedKey, std::size_t> dist;
  std::vector<PuzzleState> frontier{solved_state(g, home)};
  dist[state_key(g, frontier.front(), home)] = 0;
  for (std::size_t layer = 1; !frontier.empty(); ++layer) {
    std::vector<PuzzleState> next;
    for (const auto &s : frontier)
      for (Traversal t : legal_moves(g, s)) {
        PuzzleState n = apply_move(g, s, t);
        if (dist.emplace(state_key(g, n, home), layer).second)
          next.push_back(n);
      }
    frontier = std::move(next);
  }
  return dist;
}

} // namespace

TEST(Solver, SolvedStateNeedsNoMoves) {
  TwistGraph g = preset("theta5");
  SolveResult r = solve(g, solved_state(g, g.home()), g.home());
  EXPECT_EQ(r.status, SolveStatus::Solved);
  EXPECT_TRUE(r.moves.empty());
}

TEST(Solver, Figure8RotatedTile) {
  TwistGraph g = preset("figure8");
  PuzzleState s = apply_moves(g, solved_state(g, 0), mvs(g, {"ur+", "ur_dashed-"}));
  SolveResult r = solve(g, s, 0);
  ASSERT_EQ(r.status, SolveStatus::Solved);
  EXPECT_EQ(r.moves.size(), 2u);
  EXPECT_TRUE(verify_solution(g, s, r.moves, 0));
}

TEST(Solver, AnswersAreShortest) {
  TwistGraph g = board("theta5", 3, {{"e1", 1}, {"e2", 1}, {"e4", 1}});
  auto dist = distances(g, g.home());
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    PuzzleState s = scramble(g, solved_state(g, g.home()), 40, seed);
    SolveResult r = solve(g, s, g.home());
    ASSERT_EQ(r.status, SolveStatus::Solved);
    EXPECT_EQ(r.moves.size(), dist.at(state_key(g, s, g.home())));
    EXPECT_TRUE(verify_solution(g, s, r.moves, g.home()));
  }
}

TEST(Solver, Deterministic) {
  TwistGraph g = board("k33", 3, {{"a0b0", 1}});
  PuzzleState s = scramble(g, solved_state(g, g.home()), 12, 8);
  EXPECT_EQ(solve(g, s, g.home()).moves, solve(g, s, g.home()).moves);
}

TEST(Solver, UnsolvableWithoutSearch) {
  TwistGraph g = preset("fifteen_plus_four");
  SolveResult r = solve(g, rotate_tile(g, solved_state(g, 0), 7, 1), 0);
  EXPECT_EQ(r.status, SolveStatus::Unsolvable);
  EXPECT_EQ(r.explored, 0u);
}

TEST(Solver, CapExceeded) {
  TwistGraph g = preset("fifteen_plus_four");
  PuzzleState s = scramble(g, solved_state(g, 0), 400, 3);
  SolveResult r = solve(g, s, 0, 50);
  EXPECT_EQ(r.status, SolveStatus::CapExceeded);
  EXPECT_EQ(to_string(r.status), "cap-exceeded");
}

TEST(Solver, VerifySolutionRejectsBadSequences) {
  TwistGraph g = preset("figure8");
  PuzzleState s = apply_moves(g, solved_state(g, 0), mvs(g, {"ur+", "ur_dashed-"}));
  EXPECT_FALSE(verify_solution(g, s, {}, 0));
  EXPECT_FALSE(verify_solution(g, s, mvs(g, {"ur+"}), 0));
  EXPECT_FALSE(verify_solution(g, s, mvs(g, {"rb+", "ur+"}), 0));
}
