#pragma once

#include "isogame/generators.hpp"
#include "isogame/solver.hpp"

namespace isogame {

// Dominator move that maximizes the drop of the marking weight
// n - |marked_set|; any arena. The first move drops at least maxdeg + 1.
Policy greedy_dominator();

// Staller who always extends a run: she plays a playable neighbor of an
// already played vertex (first move: vertex 0). Wants vertices 0-indexed
// along the path/cycle and reports a defect when no run extension exists.
Policy run_staller(ArenaKind kind);

// Dominator who keeps playing v_i with v_{i-4} played and the three vertices
// between them untouched. Cycle opening: vertex 0; path opening: vertex 2.
// When no window move exists: a game-ending playable vertex if any, else the
// lowest playable one.
Policy cycle_dominator();
Policy path_dominator();

// Staged Dominator for trees of order >= 3: star centers or third vertices
// of diametrical paths while a big white component lives, then P3 centers or
// blue pivots between two white P2s, then the leftovers.
Policy tree_residual_dominator();

// Gadget play on hat graphs. Dominator answers inside the gadget of
// Staller's last move so that at most three of its vertices are ever
// played; Staller makes sure every gadget's original vertex gets played.
Policy ghat_dominator(GhatLayout layout);
Policy ghat_staller(GhatLayout layout);

}  // namespace isogame
