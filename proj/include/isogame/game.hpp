#pragma once

#include <stdexcept>
#include <vector>

#include "isogame/graph.hpp"

namespace isogame {

enum class Player : uint8_t { Dominator, Staller };

inline Player opponent(Player p) {
  return p == Player::Dominator ? Player::Staller : Player::Dominator;
}
inline const char* player_name(Player p) {
  return p == Player::Dominator ? "Dominator" : "Staller";
}

// Position is fully captured by the dominated set N[X] and whose turn it is;
// which vertices were played does not matter for legality or value.
struct GameState {
  VertexSet dominated;
  Player to_move = Player::Dominator;
};

struct IllegalMove : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// vertices of nontrivial components of G - dominated: each is undominated
// and has an undominated neighbor
VertexSet white_set(const Graph& g, VertexSet dominated);
// vertices whose closed neighborhood meets the white set; exactly the legal
// moves, and a played vertex can never become playable again
VertexSet playable(const Graph& g, VertexSet dominated);
bool is_terminal(const Graph& g, VertexSet dominated);
// plays v: dominated grows by N[v], the turn flips; throws IllegalMove
GameState apply(const Graph& g, const GameState& state, int v);
// dominated plus vertices whose whole open neighborhood is dominated
VertexSet marked_set(const Graph& g, VertexSet dominated);

enum class ArenaKind { General, Path, Cycle };

// Finished or partial game with per-move bookkeeping. xi uses the marking
// weight n - |marked_set|; u/U count newly and cumulatively unplayable
// vertices; runs are maximal played intervals (path and cycle arenas only).
struct GameTrace {
  Player first = Player::Dominator;
  std::vector<int> moves;
  std::vector<int> xi;
  std::vector<int> unplayable_new;    // u_i
  std::vector<int> unplayable_total;  // U_i
  std::vector<VertexSet> runs;

  int length() const { return static_cast<int>(moves.size()); }
  Player mover(int i) const {  // player of moves[i]
    return (i % 2 == 0) ? first : opponent(first);
  }
};

// replays trace.moves from the empty board, validating legality, and fills
// xi, u, U and (for path/cycle arenas) final runs; throws IllegalMove
void annotate_trace(const Graph& g, GameTrace& trace, ArenaKind kind = ArenaKind::General);

// maximal runs of `played` along the path/cycle vertex order, cyclic for
// cycles, ordered by lowest contained vertex
std::vector<VertexSet> played_runs(const Graph& g, VertexSet played, ArenaKind kind);

}  // namespace isogame
