#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "isogame/enumerate.hpp"
#include "isogame/generators.hpp"
#include "isogame/graph.hpp"
#include "support/oracles.hpp"

using namespace isogame;

namespace {

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

}  // namespace

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937 rng(7);
  std::vector<Graph> samples = {path(5), cycle(6), Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}),
                                Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}})};
  for (const Graph& g : samples) {
    CanonicalForm cf = canonical_form(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabeled(g, perm)) == cf);
    }
    CHECK(canonical_form(graph_from_canonical(cf)) == cf);
  }
  CHECK(canonical_form(path(4)) != canonical_form(cycle(4)));
  CHECK(canonical_form(path(4)) != canonical_form(Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}})));
}

TEST_CASE("connected graph counts match the labeled oracle and known values") {
  const long known[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 7; ++n) CHECK(static_cast<long>(enumerate_connected(n).size()) == known[n]);
  for (int n = 1; n <= 6; ++n) CHECK(oracle::count_connected_classes(n) == known[n]);
  CHECK_THROWS_AS(enumerate_connected(9), std::invalid_argument);
}

TEST_CASE("orbit counting ties class counts to labeled counts") {
  // sum over classes of n!/|Aut| must equal the labeled connected count
  const long factorial[] = {1, 1, 2, 6, 24, 120, 720, 5040};
  for (int n = 2; n <= 6; ++n) {
    long labeled = 0;
    for (const Graph& g : enumerate_connected(n)) labeled += factorial[n] / oracle::automorphism_count(g);
    CHECK(labeled == oracle::count_labeled_connected(n));
  }
  CHECK(oracle::automorphism_count(cycle(6)) == 12);
  CHECK(oracle::automorphism_count(path(4)) == 2);
  CHECK(oracle::automorphism_count(Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == 24);
}

TEST_CASE("enumerated connected graphs are distinct, connected and sorted") {
  for (int n : {4, 5, 6}) {
    auto all = enumerate_connected(n);
    std::set<CanonicalForm> forms;
    CanonicalForm prev{};
    for (const Graph& g : all) {
      CHECK(g.order() == n);
      CHECK(is_connected(g));
      CanonicalForm cf = canonical_form(g);
      CHECK(forms.insert(cf).second);
      CHECK(prev < cf);
      prev = cf;
    }
  }
}

TEST_CASE("tree counts match the known sequence and the Prüfer oracle") {
  const long known[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320};
  for (int n = 1; n <= 12; ++n) CHECK(static_cast<long>(enumerate_trees(n).size()) == known[n]);
  for (int n = 3; n <= 8; ++n) CHECK(oracle::count_free_trees_prufer(n) == known[n]);
}

TEST_CASE("enumerated trees are trees with pairwise distinct shape") {
  for (int n : {7, 9}) {
    std::set<uint64_t> certs;
    std::set<std::string> strings;
    for (const Graph& t : enumerate_trees(n)) {
      CHECK(t.order() == n);
      CHECK(is_tree(t));
      CHECK(certs.insert(oracle::packed_tree_certificate(t)).second);
      CHECK(strings.insert(tree_certificate(t)).second);
    }
  }
}

TEST_CASE("tree certificate is a relabeling invariant") {
  std::mt19937 rng(11);
  for (const Graph& t : enumerate_trees(8)) {
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph moved = relabeled(t, perm);
    CHECK(tree_certificate(moved) == tree_certificate(t));
    CHECK(oracle::packed_tree_certificate(moved) == oracle::packed_tree_certificate(t));
  }
}
