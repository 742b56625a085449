#include "isogame/io.hpp"

#include <fstream>
#include <sstream>

namespace isogame {

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  out += static_cast<char>(n + 63);
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  unsigned char h = static_cast<unsigned char>(s[0]);
  if (h == 126) throw std::invalid_argument("graph6: long form not supported");
  if (h < 63 || h > 126) throw std::invalid_argument("graph6: header byte out of range");
  int n = h - 63;
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " outside [1, 32]");
  int nbits = n * (n - 1) / 2;
  size_t want = 1 + (nbits + 5) / 6;
  if (s.size() != want)
    throw std::invalid_argument("graph6: expected " + std::to_string(want) + " bytes, got " +
                                std::to_string(s.size()));
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: body byte out of range at position " + std::to_string(i));
    int val = c - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      int b = (val >> k) & 1;
      if (bit >= nbits) {
        if (b) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (b) {
        // invert linear index -> (row, col) in column order
        int col = 1;
        int rest = bit;
        while (rest >= col) rest -= col, ++col;
        edges.emplace_back(rest, col);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_lines(in);
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const Graph& g : graphs) out << to_graph6(g) << "\n";
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.order() << " " << es.size() << "\n";
  for (auto [u, v] : es) out << u << " " << v << "\n";
  return out.str();
}

Graph from_edge_list(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return from_edge_list(in);
}

}  // namespace isogame
