#pragma once

#include <vector>

#include "isogame/game.hpp"
#include "isogame/graph.hpp"

namespace isogame {

enum class Color : uint8_t { White, Blue, LightBlue, Red };

// Coloring of the arena against a selected set S: white vertices sit in
// nontrivial components of G - N[S], blue ones are dominated with a white
// neighbor, the rest are red. Light blue marks vertices that turned blue
// during stage 2; that history cannot be recovered from (G, S) alone, so a
// fresh compute() starts with none and callers replay moves through
// update(). The stage is explicit and may only go up.
class ResidualGraph {
 public:
  static ResidualGraph compute(const Graph& g, VertexSet selected);

  // play v (must be playable), then recolor; vertices turning blue while
  // stage is 2 become light blue
  void update(int v, int stage);
  // stage may be set before the first update to weigh the opening position
  void set_stage(int stage);

  int stage() const { return stage_; }  // 0 = unset
  // 5|W| + 3|B| in stage 1; 5|W| + 3|B| + |light B| from stage 2 on
  int weight() const;

  const Graph& base() const { return *g_; }
  VertexSet selected() const { return selected_; }
  VertexSet dominated() const { return dominated_; }
  Color color(int v) const { return color_[v]; }
  VertexSet white() const { return white_; }
  VertexSet blue() const { return blue_; }       // full blue only
  VertexSet light_blue() const { return light_blue_; }
  VertexSet red() const;
  // degree in the residual graph, which keeps exactly the edges incident to
  // a white vertex
  int residual_degree(int v) const;
  std::vector<std::pair<int, int>> residual_edges() const;

 private:
  void recolor(int stage_of_move);

  const Graph* g_ = nullptr;
  VertexSet selected_, dominated_, white_, blue_, light_blue_;
  Color color_[kMaxVertices] = {};
  int stage_ = 0;
};

// white components tagged the way the tree argument needs them: big means
// order >= 4; a P2 component is special when every blue vertex next to it
// has residual degree 1
struct WhiteComponent {
  VertexSet vertices;
  bool big = false;
  bool special = false;
};

struct Classification {
  int stage = 3;  // 1 while a big component lives, 3 when all are special
  std::vector<WhiteComponent> components;
};

// throws on a small component that is neither P2 nor P3 (possible only off
// trees)
Classification classify(const ResidualGraph& r);

// One move of the staged accounting: its stage tag, and how much the staged
// weight dropped. Dominator moves are tagged by the position in front of
// them; Staller moves inherit the tag of the move before.
struct StagedMove {
  int vertex = -1;
  Player mover = Player::Dominator;
  int stage = 0;
  int xi = 0;
};

struct StagedReplay {
  std::vector<StagedMove> moves;
  int initial_weight = 0;  // 5n
  int final_weight = 0;
  bool stages_monotone = true;
};

// replays a game on a tree through the residual bookkeeping
StagedReplay replay_staged(const Graph& tree, const GameTrace& trace);

}  // namespace isogame
