#include "isogame/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace isogame {

std::string CanonicalForm::to_string() const {
  static const char* hex = "0123456789abcdef";
  std::string s = std::to_string(n) + ":";
  int nbits = n * (n - 1) / 2;
  for (int shift = ((nbits + 3) / 4 - 1) * 4; shift >= 0; shift -= 4)
    s += hex[(bits >> shift) & 0xf];
  return s;
}

namespace {

constexpr int kCanonicalCap = 10;  // C(10,2) = 45 certificate bits fit one word

// depth-first search for the smallest column vector; best[k] holds the
// smallest value seen for column k given the current best prefix, with
// deeper columns reset to all-ones whenever a prefix improves
struct CanonicalSearch {
  const Graph* g;
  int n;
  uint32_t best[kCanonicalCap];
  int perm[kCanonicalCap];
  uint32_t used = 0;

  void run() {
    for (int k = 0; k < n; ++k) best[k] = (1u << k) - 1u;
    descend(0);
  }

  void descend(int k) {
    if (k == n) return;
    // column value of v against the placed prefix, most significant bit first
    uint32_t cand_val[kCanonicalCap];
    int cand_v[kCanonicalCap];
    int m = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      uint32_t c = 0;
      for (int i = 0; i < k; ++i) c = (c << 1) | (g->adjacent(perm[i], v) ? 1u : 0u);
      cand_val[m] = c;
      cand_v[m] = v;
      ++m;
    }
    // ascending value order finds the minimum early and prunes the rest
    for (int a = 1; a < m; ++a)
      for (int b = a; b > 0 && cand_val[b] < cand_val[b - 1]; --b) {
        std::swap(cand_val[b], cand_val[b - 1]);
        std::swap(cand_v[b], cand_v[b - 1]);
      }
    for (int a = 0; a < m; ++a) {
      if (cand_val[a] > best[k]) break;
      if (cand_val[a] < best[k]) {
        best[k] = cand_val[a];
        for (int j = k + 1; j < n; ++j) best[j] = (1u << j) - 1u;
      }
      perm[k] = cand_v[a];
      used |= 1u << cand_v[a];
      descend(k + 1);
      used &= ~(1u << cand_v[a]);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  int n = g.order();
  if (n > kCanonicalCap)
    throw std::invalid_argument("canonical_form works up to order 10, got " + std::to_string(n));
  CanonicalSearch search{&g, n, {}, {}, 0};
  search.run();
  CanonicalForm cf;
  cf.n = static_cast<uint8_t>(n);
  for (int k = 1; k < n; ++k) cf.bits = (cf.bits << k) | search.best[k];
  return cf;
}

Graph graph_from_canonical(const CanonicalForm& cf) {
  int n = cf.n;
  std::vector<std::pair<int, int>> edges;
  int nbits = n * (n - 1) / 2;
  int bit = nbits - 1;  // bit index counted from the least significant end
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, --bit)
      if ((cf.bits >> bit) & 1u) edges.emplace_back(row, col);
  return Graph::from_edges(n, edges);
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_connected works up to order 8, got " + std::to_string(n));
  std::set<CanonicalForm> classes = {canonical_form(Graph::from_edges(1, {}))};
  for (int k = 2; k <= n; ++k) {
    std::set<CanonicalForm> next;
    for (const CanonicalForm& cf : classes) {
      Graph parent = graph_from_canonical(cf);
      auto base_edges = parent.edges();
      // attach a fresh vertex to every nonempty subset of the parent;
      // every connected graph of order k arises this way from some
      // connected graph of order k-1 (delete a non-cut vertex)
      for (uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
        auto edges = base_edges;
        for (int v : VertexSet::from_bits(mask)) edges.emplace_back(v, k - 1);
        next.insert(canonical_form(Graph::from_edges(k, edges)));
      }
    }
    classes = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (const CanonicalForm& cf : classes) out.push_back(graph_from_canonical(cf));
  return out;
}

namespace {

// AHU-style shape string of the subtree at v, children sorted; "()" pairs
std::string rooted_cert(const Graph& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int u : g.open_neighborhood(v))
    if (u != parent) kids.push_back(rooted_cert(g, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const std::string& k : kids) s += k;
  return s + ")";
}

std::vector<int> centroids(const Graph& g) {
  int n = g.order();
  std::vector<int> size(n, 1), order, parent(n, -1);
  std::vector<bool> seen(n, false);
  order.reserve(n);
  order.push_back(0);
  seen[0] = true;
  for (size_t i = 0; i < order.size(); ++i)
    for (int u : g.open_neighborhood(order[i]))
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = order[i];
        order.push_back(u);
      }
  for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    int biggest = n - size[v];
    for (int u : g.open_neighborhood(v))
      if (parent[u] == v) biggest = std::max(biggest, size[u]);
    if (biggest <= n / 2) out.push_back(v);
  }
  return out;
}

// rebuild a tree from its "()" certificate, preorder labeling from the root
Graph graph_from_cert(const std::string& cert) {
  std::vector<std::pair<int, int>> edges;
  int next_label = 0;
  std::vector<int> stack;
  for (char c : cert) {
    if (c == '(') {
      if (!stack.empty()) edges.emplace_back(stack.back(), next_label);
      stack.push_back(next_label++);
    } else {
      stack.pop_back();
    }
  }
  return Graph::from_edges(next_label, edges);
}

}  // namespace

std::string tree_certificate(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("tree_certificate needs a tree");
  std::string best;
  for (int c : centroids(g)) {
    std::string s = rooted_cert(g, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("enumerate_trees works up to order 16, got " + std::to_string(n));
  if (n == 1) return {Graph::from_edges(1, {})};
  if (n == 2) return {Graph::from_edges(2, {{0, 1}})};

  std::set<std::string> certs;
  // canonical level sequences of rooted trees, visited in decreasing
  // lexicographic order from the path down to the star
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i + 1;
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
      for (int j = i - 1; j >= 0; --j)
        if (level[j] == level[i] - 1) {
          edges.emplace_back(j, i);
          break;
        }
    certs.insert(tree_certificate(Graph::from_edges(n, edges)));

    int p = n - 1;
    while (p >= 0 && level[p] <= 2) --p;
    if (p < 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }

  std::vector<Graph> out;
  out.reserve(certs.size());
  for (const std::string& c : certs) out.push_back(graph_from_cert(c));
  return out;
}

}  // namespace isogame
