#include "isogame/graph.hpp"

#include <string>

namespace isogame {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be in [1, 32], got " + std::to_string(n));
  Graph g;
  g.n_ = n;
  for (int v = 0; v < n; ++v) g.closed_[v] = VertexSet::single(v);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v)
      throw std::invalid_argument("loop rejected at vertex " + std::to_string(u));
    if (g.closed_[u].contains(v))
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    g.closed_[u].add(v);
    g.closed_[v].add(u);
  }
  return g;
}

int Graph::edge_count() const {
  int deg_sum = 0;
  for (int v = 0; v < n_; ++v) deg_sum += degree(v);
  return deg_sum / 2;
}

VertexSet Graph::closed_neighborhood(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= closed_[v];
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : open_neighborhood(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (closed_[v] != o.closed_[v]) return false;
  return true;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.lowest());
    for (;;) {
      VertexSet grown = comp;
      for (int v : comp) grown |= g.closed_neighborhood(v) & within;
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.order() - 1;
}

}  // namespace isogame
