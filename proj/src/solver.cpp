#include "isogame/solver.hpp"

#include <algorithm>
#include <limits>

namespace isogame {

namespace {
constexpr int kSolverCap = 24;
constexpr int kDenseCap = 20;

uint64_t state_key(VertexSet dominated, Player to_move) {
  return (static_cast<uint64_t>(dominated.bits()) << 1) |
         (to_move == Player::Staller ? 1u : 0u);
}
}  // namespace

GameSolver::GameSolver(const Graph& g) : g_(g), dense_(g.order() <= kDenseCap) {
  if (g.order() > kSolverCap)
    throw std::invalid_argument("exact solve capped at 24 vertices, got " +
                                std::to_string(g.order()));
  if (dense_) table_.assign(1ull << (g.order() + 1), int16_t(-1));
}

int16_t& GameSolver::slot(VertexSet dominated, Player to_move) {
  uint64_t key = state_key(dominated, to_move);
  if (dense_) return table_[key];
  return map_.try_emplace(key, int16_t(-1)).first->second;
}

int GameSolver::value(VertexSet dominated, Player to_move) {
  int16_t& memo = slot(dominated, to_move);
  if (memo >= 0) return memo;
  ++states_visited_;
  VertexSet moves = playable(g_, dominated);
  int best = 0;
  if (!moves.empty()) {
    best = to_move == Player::Dominator ? std::numeric_limits<int>::max() : 0;
    for (int v : moves) {
      int child = 1 + value(dominated | g_.closed_neighborhood(v), opponent(to_move));
      best = to_move == Player::Dominator ? std::min(best, child) : std::max(best, child);
    }
  }
  slot(dominated, to_move) = static_cast<int16_t>(best);
  return best;
}

VertexSet GameSolver::optimal_moves(VertexSet dominated, Player to_move) {
  VertexSet moves = playable(g_, dominated);
  if (moves.empty()) return moves;
  int target = value(dominated, to_move);
  VertexSet out;
  for (int v : moves)
    if (1 + value(dominated | g_.closed_neighborhood(v), opponent(to_move)) == target)
      out.add(v);
  return out;
}

GameTrace GameSolver::principal_trace(Player first) {
  GameTrace trace;
  trace.first = first;
  GameState state{VertexSet(), first};
  while (!is_terminal(g_, state.dominated)) {
    int v = optimal_moves(state.dominated, state.to_move).lowest();
    trace.moves.push_back(v);
    state = apply(g_, state, v);
  }
  annotate_trace(g_, trace);
  return trace;
}

SolveResult game_value(const Graph& g, Player first) {
  GameSolver solver(g);
  SolveResult res;
  res.value = solver.value(VertexSet(), first);
  res.principal_trace = solver.principal_trace(first);
  res.states_visited = solver.states_visited();
  return res;
}

VertexSet optimal_moves(const Graph& g, VertexSet dominated, Player to_move) {
  GameSolver solver(g);
  return solver.optimal_moves(dominated, to_move);
}

namespace {

void isolation_dfs(const Graph& g, VertexSet dominated, int size, int& best) {
  if (size >= best) return;
  VertexSet white = white_set(g, dominated);
  if (white.empty()) {
    best = size;
    return;
  }
  // an isolating set must dominate u or its white neighbor w, so branch
  // over those two closed neighborhoods only
  int u = white.lowest();
  int w = (g.open_neighborhood(u) & white).lowest();
  VertexSet candidates = g.closed_neighborhood(u) | g.closed_neighborhood(w);
  for (int v : candidates)
    isolation_dfs(g, dominated | g.closed_neighborhood(v), size + 1, best);
}

}  // namespace

int isolation_number(const Graph& g) {
  int best = g.order();  // the full vertex set always isolates
  isolation_dfs(g, VertexSet(), 0, best);
  return best;
}

int max_turn_value_gap(const Graph& g) {
  if (g.order() > 16)
    throw std::invalid_argument("turn gap scan is exponential; capped at 16 vertices");
  GameSolver solver(g);
  int gap = 0;
  for (uint32_t m = 0; m < (1u << g.order()); ++m) {
    VertexSet dominated = VertexSet::from_bits(m);
    gap = std::max(gap, std::abs(solver.value(dominated, Player::Dominator) -
                                 solver.value(dominated, Player::Staller)));
  }
  return gap;
}

namespace {

struct PolicySearch {
  const Graph& g;
  const Policy& policy;
  Player policy_player;
  std::unordered_map<uint64_t, int16_t> memo;

  uint64_t key(VertexSet played, int last, Player to_move) const {
    uint64_t tag = to_move == policy_player ? static_cast<uint64_t>(last + 2) : 0;
    return (static_cast<uint64_t>(played.bits()) << 6) | tag;
  }

  int policy_move(VertexSet played, VertexSet dominated, int last) {
    int v = policy.choose(PolicyContext{g, played, dominated, last});
    if (v < 0 || v >= g.order() || !playable(g, dominated).contains(v))
      throw PolicyDefect(policy.name + " chose unplayable vertex " + std::to_string(v) +
                         " with dominated=" + dominated.to_string());
    return v;
  }

  int eval(VertexSet played, VertexSet dominated, int last, Player to_move) {
    auto [it, fresh] = memo.try_emplace(key(played, last, to_move), int16_t(-1));
    if (!fresh && it->second >= 0) return it->second;
    int result;
    if (is_terminal(g, dominated)) {
      result = 0;
    } else if (to_move == policy_player) {
      int v = policy_move(played, dominated, last);
      result = 1 + eval(played.with(v), dominated | g.closed_neighborhood(v), v,
                        opponent(to_move));
    } else {
      bool minimize = to_move == Player::Dominator;
      result = minimize ? std::numeric_limits<int>::max() : 0;
      for (int v : playable(g, dominated)) {
        int child =
            1 + eval(played.with(v), dominated | g.closed_neighborhood(v), v, opponent(to_move));
        result = minimize ? std::min(result, child) : std::max(result, child);
      }
    }
    memo[key(played, last, to_move)] = static_cast<int16_t>(result);
    return result;
  }
};

}  // namespace

SolveResult policy_vs_optimal(const Graph& g, const Policy& policy, Player policy_player,
                              Player first) {
  PolicySearch search{g, policy, policy_player, {}};
  SolveResult res;
  res.value = search.eval(VertexSet(), VertexSet(), -1, first);

  GameTrace trace;
  trace.first = first;
  VertexSet played, dominated;
  int last = -1;
  Player to_move = first;
  while (!is_terminal(g, dominated)) {
    int move;
    if (to_move == policy_player) {
      move = search.policy_move(played, dominated, last);
    } else {
      int node = search.eval(played, dominated, last, to_move);
      move = -1;
      for (int v : playable(g, dominated)) {
        int child = 1 + search.eval(played.with(v), dominated | g.closed_neighborhood(v), v,
                                    opponent(to_move));
        if (child == node) {
          move = v;
          break;
        }
      }
    }
    trace.moves.push_back(move);
    played.add(move);
    dominated |= g.closed_neighborhood(move);
    last = move;
    to_move = opponent(to_move);
  }
  annotate_trace(g, trace);
  res.principal_trace = trace;
  res.states_visited = search.memo.size();
  return res;
}

}  // namespace isogame
