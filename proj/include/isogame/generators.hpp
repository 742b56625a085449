#pragma once

#include <string>

#include "isogame/graph.hpp"

namespace isogame {

Graph path(int n);
Graph cycle(int n);  // n >= 3

// The eleven graphs where the Staller-start game needs exactly half the
// vertices. F1..F6 are hardcoded small shapes; F7..F11 are the remaining
// order-8 graphs, read from the catalog that `isogame extremal-s` emits
// (data/family_f_catalog.g6, override with ISOGAME_F_CATALOG).
Graph family_f(int i, const std::string& catalog_path = "");

// Per-vertex gadget bookkeeping for the hat construction: vertex v of the
// base graph gets two triangles, each tied to v by a single edge. Originals
// keep their indices; gadget vertices for v are base_n + 6v .. base_n + 6v+5
// with the two attachment points first in each triple.
struct GhatLayout {
  int base_n = 0;

  explicit GhatLayout(int n) : base_n(n) {}
  int order() const { return 7 * base_n; }
  // base vertex whose gadget contains u (originals map to themselves)
  int gadget_of(int u) const { return u < base_n ? u : (u - base_n) / 6; }
  VertexSet gadget(int v) const {
    VertexSet s = VertexSet::single(v);
    for (int k = 0; k < 6; ++k) s.add(base_n + 6 * v + k);
    return s;
  }
  VertexSet triangle(int v, int which) const {
    int t = base_n + 6 * v + 3 * which;
    return VertexSet::of({t, t + 1, t + 2});
  }
  int attachment(int v, int which) const { return base_n + 6 * v + 3 * which; }
};

Graph ghat(const Graph& base);

}  // namespace isogame
