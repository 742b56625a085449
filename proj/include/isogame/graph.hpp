#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isogame/vertex_set.hpp"

namespace isogame {

// Simple undirected graph on 0..n-1, stored as closed neighborhood masks.
// Order is between 1 and 32; loops and multi-edges are rejected on input.
// closed_neighborhood(v) always contains v itself.
class Graph {
 public:
  Graph() = default;  // order-0 placeholder, not a valid arena

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::first_n(n_); }
  VertexSet closed_neighborhood(int v) const { return closed_[v]; }
  VertexSet open_neighborhood(int v) const { return closed_[v].without(v); }
  // N[S] = union of closed neighborhoods over S
  VertexSet closed_neighborhood(VertexSet s) const;
  bool adjacent(int u, int v) const { return u != v && closed_[u].contains(v); }
  int degree(int v) const { return closed_[v].count() - 1; }
  int max_degree() const;
  int min_degree() const;
  // edges as (u, v) with u < v, sorted lexicographically
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> closed_{};
};

// connected components of the subgraph induced on `within`, ordered by
// lowest contained vertex
std::vector<VertexSet> components(const Graph& g, VertexSet within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace isogame
