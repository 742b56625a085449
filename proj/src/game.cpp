#include "isogame/game.hpp"

#include <algorithm>
#include <string>

namespace isogame {

VertexSet white_set(const Graph& g, VertexSet dominated) {
  VertexSet undominated = g.vertices() - dominated;
  VertexSet white;
  for (int v : undominated)
    if (g.open_neighborhood(v).intersects(undominated)) white.add(v);
  return white;
}

VertexSet playable(const Graph& g, VertexSet dominated) {
  VertexSet white = white_set(g, dominated);
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.closed_neighborhood(v).intersects(white)) out.add(v);
  return out;
}

bool is_terminal(const Graph& g, VertexSet dominated) {
  return white_set(g, dominated).empty();
}

GameState apply(const Graph& g, const GameState& state, int v) {
  if (v < 0 || v >= g.order())
    throw IllegalMove("vertex " + std::to_string(v) + " out of range");
  if (!playable(g, state.dominated).contains(v))
    throw IllegalMove("vertex " + std::to_string(v) +
                      " is not playable: its closed neighborhood has no white vertex");
  return GameState{state.dominated | g.closed_neighborhood(v), opponent(state.to_move)};
}

VertexSet marked_set(const Graph& g, VertexSet dominated) {
  VertexSet out = dominated;
  for (int v : g.vertices() - dominated)
    if (g.open_neighborhood(v).is_subset_of(dominated)) out.add(v);
  return out;
}

std::vector<VertexSet> played_runs(const Graph& g, VertexSet played, ArenaKind kind) {
  std::vector<VertexSet> out;
  if (kind == ArenaKind::General || played.empty()) return out;
  int n = g.order();
  if (kind == ArenaKind::Cycle && played == g.vertices()) return {played};
  // walk the vertex order, stitching the wrap-around pair for cycles
  int start = 0;
  if (kind == ArenaKind::Cycle)
    while (played.contains((start + n - 1) % n) && start < n) ++start;  // run must not begin mid-way
  VertexSet current;
  for (int i = 0; i < n; ++i) {
    int v = (start + i) % n;
    if (played.contains(v)) {
      current.add(v);
    } else if (!current.empty()) {
      out.push_back(current);
      current = VertexSet();
    }
  }
  if (!current.empty()) out.push_back(current);
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return a.lowest() < b.lowest(); });
  return out;
}

void annotate_trace(const Graph& g, GameTrace& trace, ArenaKind kind) {
  trace.xi.clear();
  trace.unplayable_new.clear();
  trace.unplayable_total.clear();
  trace.runs.clear();
  GameState state{VertexSet(), trace.first};
  VertexSet played;
  int n = g.order();
  int weight_before = n - marked_set(g, state.dominated).count();
  int playable_before = playable(g, state.dominated).count();
  int playable_start = playable_before;
  for (int v : trace.moves) {
    state = apply(g, state, v);
    played.add(v);
    int weight_after = n - marked_set(g, state.dominated).count();
    int playable_after = playable(g, state.dominated).count();
    trace.xi.push_back(weight_before - weight_after);
    trace.unplayable_new.push_back(playable_before - playable_after);
    trace.unplayable_total.push_back(playable_start - playable_after);
    weight_before = weight_after;
    playable_before = playable_after;
  }
  trace.runs = played_runs(g, played, kind);
}

}  // namespace isogame
