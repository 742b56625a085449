#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "isogame/graph.hpp"

namespace isogame {

// Isomorphism certificate: the lexicographically smallest upper-triangle
// encoding (column order, same bit order as graph6) over all vertex
// relabelings. Only for n <= 10, where C(n,2) <= 45 bits fits one word.
struct CanonicalForm {
  uint8_t n = 0;
  uint64_t bits = 0;  // first encoding bit is the most significant used bit

  auto operator<=>(const CanonicalForm&) const = default;
  std::string to_string() const;
};

CanonicalForm canonical_form(const Graph& g);
Graph graph_from_canonical(const CanonicalForm& cf);

// all connected graphs up to isomorphism, one canonical representative each,
// sorted by certificate; n <= 8
std::vector<Graph> enumerate_connected(int n);

// all free trees up to isomorphism; n <= 16. Rooted trees come from the
// level-sequence successor walk; free trees are kept via a centroid-rooted
// certificate.
std::vector<Graph> enumerate_trees(int n);

// centroid-rooted shape certificate for free trees of any order <= 32;
// equal strings iff isomorphic
std::string tree_certificate(const Graph& g);

}  // namespace isogame
