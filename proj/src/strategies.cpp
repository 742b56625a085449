#include "isogame/strategies.hpp"

#include <algorithm>
#include <array>

#include "isogame/residual.hpp"

namespace isogame {

namespace {

bool is_path_indexed(const Graph& g) {
  int n = g.order();
  for (int v = 0; v < n; ++v) {
    VertexSet want = VertexSet::single(v);
    if (v > 0) want.add(v - 1);
    if (v + 1 < n) want.add(v + 1);
    if (g.closed_neighborhood(v) != want) return false;
  }
  return true;
}

bool is_cycle_indexed(const Graph& g) {
  int n = g.order();
  if (n < 3) return false;
  for (int v = 0; v < n; ++v) {
    VertexSet want = VertexSet::of({(v + n - 1) % n, v, (v + 1) % n});
    if (g.closed_neighborhood(v) != want) return false;
  }
  return true;
}

void require_arena(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("wrong arena: " + what);
}

}  // namespace

Policy greedy_dominator() {
  return Policy{"greedy_dominator", [](const PolicyContext& ctx) {
    const Graph& g = ctx.graph;
    int before = marked_set(g, ctx.dominated).count();
    int best_v = -1, best_drop = -1;
    for (int v : playable(g, ctx.dominated)) {
      int drop = marked_set(g, ctx.dominated | g.closed_neighborhood(v)).count() - before;
      if (drop > best_drop) {
        best_drop = drop;
        best_v = v;
      }
    }
    return best_v;
  }};
}

Policy run_staller(ArenaKind kind) {
  require_arena(kind != ArenaKind::General, "run_staller needs a path or cycle");
  return Policy{"run_staller", [kind](const PolicyContext& ctx) {
    const Graph& g = ctx.graph;
    require_arena(kind == ArenaKind::Path ? is_path_indexed(g) : is_cycle_indexed(g),
                  "vertices must be 0-indexed along the arena");
    if (ctx.played.empty()) return 0;  // endpoint of the path, any cycle vertex
    VertexSet next_to_played;
    for (int x : ctx.played) next_to_played |= g.open_neighborhood(x);
    VertexSet candidates = playable(g, ctx.dominated) & next_to_played;
    if (candidates.empty())
      throw PolicyDefect("run_staller has no playable neighbor of a played vertex");
    return candidates.lowest();
  }};
}

namespace {

int window_move(const Graph& g, const PolicyContext& ctx, bool cyclic) {
  int n = g.order();
  VertexSet can_play = playable(g, ctx.dominated);
  int lo = cyclic ? 0 : 4;
  for (int i = lo; i < n; ++i) {
    auto back = [&](int k) { return cyclic ? (i + n - k) % n : i - k; };
    if (can_play.contains(i) && ctx.played.contains(back(4)) && !ctx.played.contains(back(3)) &&
        !ctx.played.contains(back(2)) && !ctx.played.contains(back(1)))
      return i;
  }
  // no window: finish the game on the spot when possible
  for (int v : can_play)
    if (is_terminal(g, ctx.dominated | g.closed_neighborhood(v))) return v;
  return can_play.lowest();
}

}  // namespace

Policy cycle_dominator() {
  return Policy{"cycle_dominator", [](const PolicyContext& ctx) {
    require_arena(is_cycle_indexed(ctx.graph), "cycle_dominator needs a 0-indexed cycle");
    if (ctx.played.empty()) return 0;
    return window_move(ctx.graph, ctx, true);
  }};
}

Policy path_dominator() {
  return Policy{"path_dominator", [](const PolicyContext& ctx) {
    require_arena(is_path_indexed(ctx.graph), "path_dominator needs a 0-indexed path");
    if (ctx.played.empty())
      return ctx.graph.order() >= 3 ? 2 : playable(ctx.graph, ctx.dominated).lowest();
    return window_move(ctx.graph, ctx, false);
  }};
}

namespace {

// all-pairs distances inside the induced subtree `comp`; -1 when unreachable
std::array<std::array<int8_t, kMaxVertices>, kMaxVertices> comp_distances(const Graph& g,
                                                                          VertexSet comp) {
  std::array<std::array<int8_t, kMaxVertices>, kMaxVertices> d{};
  for (int x : comp) {
    for (int v = 0; v < g.order(); ++v) d[x][v] = -1;
    d[x][x] = 0;
    VertexSet frontier = VertexSet::single(x);
    int depth = 0;
    while (!frontier.empty()) {
      ++depth;
      VertexSet next;
      for (int u : frontier) next |= g.open_neighborhood(u) & comp;
      for (int u : next)
        if (d[x][u] < 0) {
          d[x][u] = static_cast<int8_t>(depth);
        } else {
          next.remove(u);
        }
      frontier = next;
    }
  }
  return d;
}

// lexicographically smallest diametrical vertex sequence of the induced
// subtree, both orientations considered
std::vector<int> diametrical_path(const Graph& g, VertexSet comp) {
  auto d = comp_distances(g, comp);
  int diam = 0;
  for (int x : comp)
    for (int y : comp) diam = std::max(diam, static_cast<int>(d[x][y]));
  std::vector<int> best;
  for (int x : comp)
    for (int y : comp) {
      if (d[x][y] != diam) continue;
      std::vector<int> seq{x};
      int at = x;
      while (at != y)
        for (int u : g.open_neighborhood(at) & comp)
          if (d[u][y] == d[at][y] - 1) {
            seq.push_back(u);
            at = u;
            break;
          }
      if (best.empty() || seq < best) best = seq;
    }
  return best;
}

// center of a star component, or -1 if not a star
int star_center(const Graph& g, VertexSet comp) {
  for (int c : comp)
    if ((g.open_neighborhood(c) & comp) == comp.without(c)) return c;
  return -1;
}

}  // namespace

Policy tree_residual_dominator() {
  return Policy{"tree_residual_dominator", [](const PolicyContext& ctx) {
    const Graph& g = ctx.graph;
    require_arena(is_tree(g) && g.order() >= 3, "tree_residual_dominator needs a tree, n >= 3");
    ResidualGraph r = ResidualGraph::compute(g, ctx.played);
    Classification cls = classify(r);

    if (cls.stage == 1) {
      int center = -1;
      for (const WhiteComponent& comp : cls.components)
        if (comp.big) {
          int c = star_center(g, comp.vertices);
          if (c >= 0 && (center < 0 || c < center)) center = c;
        }
      if (center >= 0) return center;
      for (const WhiteComponent& comp : cls.components)
        if (comp.big) return diametrical_path(g, comp.vertices)[2];
    }

    if (cls.stage == 2) {
      int center = -1;
      for (const WhiteComponent& comp : cls.components)
        if (comp.vertices.count() == 3) {
          int c = star_center(g, comp.vertices);  // P3 center
          if (center < 0 || c < center) center = c;
        }
      if (center >= 0) return center;
      // only P2 components left, at least one with a busy blue neighbor:
      // that blue vertex touches two different pairs and kills both
      for (int b : r.blue())
        if (r.residual_degree(b) >= 2) return b;
      throw PolicyDefect("stage 2 on a tree must offer a P3 or a blue pivot");
    }

    return r.white().lowest();  // stage 3: pick off the lowest special pair
  }};
}

namespace {

void verify_ghat_arena(const Graph& g, const GhatLayout& lay) {
  require_arena(lay.base_n >= 1 && g.order() == lay.order(),
                "graph order does not match the hat layout");
  for (int v = 0; v < lay.base_n; ++v)
    for (int which = 0; which < 2; ++which) {
      int t = lay.attachment(v, which);
      require_arena(g.adjacent(t, t + 1) && g.adjacent(t + 1, t + 2) && g.adjacent(t, t + 2) &&
                        g.adjacent(v, t) && g.degree(t) == 3 && g.degree(t + 1) == 2 &&
                        g.degree(t + 2) == 2,
                    "hat gadget structure is broken at base vertex " + std::to_string(v));
    }
}

}  // namespace

Policy ghat_dominator(GhatLayout layout) {
  return Policy{"ghat_dominator", [layout](const PolicyContext& ctx) {
    const Graph& g = ctx.graph;
    verify_ghat_arena(g, layout);
    if (ctx.played.empty()) return 0;  // open on an original vertex
    VertexSet can_play = playable(g, ctx.dominated);
    int target = layout.gadget_of(ctx.last_move);
    if ((can_play & layout.gadget(target)).empty()) {
      target = -1;
      for (int v = 0; v < layout.base_n && target < 0; ++v)
        if (!(can_play & layout.gadget(v)).empty()) target = v;
    }
    VertexSet in_gadget = can_play & layout.gadget(target);
    // answer with the original vertex while it is fresh and useful
    if (!ctx.played.contains(target) && in_gadget.contains(target)) return target;
    // otherwise clear out an untouched triangle
    for (int which = 0; which < 2; ++which) {
      VertexSet tri = layout.triangle(target, which);
      if ((tri & ctx.played).empty() && !(tri & can_play).empty()) return (tri & can_play).lowest();
    }
    return in_gadget.lowest();
  }};
}

Policy ghat_staller(GhatLayout layout) {
  return Policy{"ghat_staller", [layout](const PolicyContext& ctx) {
    const Graph& g = ctx.graph;
    verify_ghat_arena(g, layout);
    VertexSet can_play = playable(g, ctx.dominated);
    if (ctx.played.empty()) return 0;  // forced to open: take the original vertex
    int w = layout.gadget_of(ctx.last_move);
    bool fresh_open = (ctx.played & layout.gadget(w)) == VertexSet::single(ctx.last_move);
    if (fresh_open) {
      // he opened this gadget; make sure its original vertex gets played
      int reply = ctx.last_move == w ? layout.attachment(w, 0) : w;
      if (!can_play.contains(reply))
        throw PolicyDefect("ghat_staller reply " + std::to_string(reply) + " is not playable");
      return reply;
    }
    for (int v = 0; v < layout.base_n; ++v)
      if ((ctx.played & layout.gadget(v)).empty() && !(can_play & layout.gadget(v)).empty()) {
        if (!can_play.contains(v))
          throw PolicyDefect("untouched gadget " + std::to_string(v) +
                             " lost its original vertex");
        return v;
      }
    return can_play.lowest();
  }};
}

}  // namespace isogame
