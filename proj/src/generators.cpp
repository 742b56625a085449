#include "isogame/generators.hpp"

#include <cstdlib>
#include <fstream>

#include "isogame/io.hpp"

#ifndef ISOGAME_DATA_DIR
#define ISOGAME_DATA_DIR "data"
#endif

namespace isogame {

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, edges);
}

namespace {

Graph family_f_small(int i) {
  switch (i) {
    case 1:  // K2
      return path(2);
    case 2:  // P4
      return path(4);
    case 3:  // triangle with a pendant
      return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    case 4:  // spider: a 7-vertex path with a pendant on its middle vertex
      return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
    case 5:  // triangle, a 4-edge tail off one corner, pendant at the first tail vertex
      return Graph::from_edges(
          8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
    case 6:  // two triangles joined through a middle vertex that carries a pendant
      return Graph::from_edges(
          8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {3, 7}});
    default:
      throw std::invalid_argument("family_f index must be in [1, 11]");
  }
}

std::string resolve_catalog_path(const std::string& override_path) {
  if (!override_path.empty()) return override_path;
  if (const char* env = std::getenv("ISOGAME_F_CATALOG")) return env;
  return std::string(ISOGAME_DATA_DIR) + "/family_f_catalog.g6";
}

}  // namespace

Graph family_f(int i, const std::string& catalog_path) {
  if (i < 1 || i > 11) throw std::invalid_argument("family_f index must be in [1, 11]");
  if (i <= 6) return family_f_small(i);
  std::string where = resolve_catalog_path(catalog_path);
  std::ifstream in(where);
  if (!in)
    throw std::runtime_error("family_f(" + std::to_string(i) + ") needs the derived catalog; " +
                             where + " is missing (regenerate with `isogame extremal-s`)");
  std::vector<Graph> rest = read_graph6_lines(in);
  if (rest.size() != 5)
    throw std::runtime_error("derived catalog " + where + " should hold 5 graphs, found " +
                             std::to_string(rest.size()));
  return rest[i - 7];
}

Graph ghat(const Graph& base) {
  int n = base.order();
  if (7 * n > kMaxVertices)
    throw std::invalid_argument("ghat(base) has 7*" + std::to_string(n) +
                                " vertices, over the 32-vertex cap");
  GhatLayout lay(n);
  std::vector<std::pair<int, int>> edges = base.edges();
  for (int v = 0; v < n; ++v) {
    for (int which = 0; which < 2; ++which) {
      int t = lay.attachment(v, which);
      edges.emplace_back(t, t + 1);
      edges.emplace_back(t + 1, t + 2);
      edges.emplace_back(t, t + 2);
      edges.emplace_back(v, t);
    }
  }
  return Graph::from_edges(7 * n, edges);
}

}  // namespace isogame
