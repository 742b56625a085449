#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "isogame/game.hpp"

namespace isogame {

struct SolveResult {
  int value = 0;
  GameTrace principal_trace;
  uint64_t states_visited = 0;
};

// Memoized minimax over (dominated set, player to move). Dominator takes the
// cheapest child, Staller the dearest, terminal positions are worth 0 and
// every move costs 1. Dense table up to n = 20, hash map above; hard cap 24.
class GameSolver {
 public:
  explicit GameSolver(const Graph& g);

  int value(VertexSet dominated, Player to_move);
  // all moves whose child value matches the minimax value
  VertexSet optimal_moves(VertexSet dominated, Player to_move);
  // optimal play by both, lowest-index move among optimal at every turn
  GameTrace principal_trace(Player first);
  uint64_t states_visited() const { return states_visited_; }
  const Graph& graph() const { return g_; }

 private:
  int16_t& slot(VertexSet dominated, Player to_move);

  Graph g_;
  bool dense_;
  std::vector<int16_t> table_;
  std::unordered_map<uint64_t, int16_t> map_;
  uint64_t states_visited_ = 0;
};

// game length under optimal play from the empty board
SolveResult game_value(const Graph& g, Player first);
VertexSet optimal_moves(const Graph& g, VertexSet dominated, Player to_move);

// smallest isolating set size, by branch and bound over white edges; kept
// free of the game search so the two can cross-check each other
int isolation_number(const Graph& g);

// largest |value(M, Dominator) - value(M, Staller)| over all 2^n dominated
// sets; reported by tests and fuzzing, never assumed by the solver
int max_turn_value_gap(const Graph& g);

// A policy sees the played set, the dominated set and the latest move; it
// must return a playable vertex. Policies that break their own written
// guarantee throw PolicyDefect rather than patching over it.
struct PolicyContext {
  const Graph& graph;
  VertexSet played;
  VertexSet dominated;
  int last_move = -1;  // -1 before the first move
};

struct PolicyDefect : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Policy {
  std::string name;
  std::function<int(const PolicyContext&)> choose;
};

// value when `policy_player` follows the policy and the other side plays the
// exact worst case against it; memo keys on the played set plus, at policy
// turns, the preceding move, which covers everything our policies look at
SolveResult policy_vs_optimal(const Graph& g, const Policy& policy, Player policy_player,
                              Player first);

}  // namespace isogame
