#include <sstream>

#include "doctest.h"
#include "isogame/enumerate.hpp"
#include "isogame/generators.hpp"
#include "isogame/io.hpp"
#include "support/oracles.hpp"

using namespace isogame;

TEST_CASE("graph6 encodings match hand-packed strings") {
  CHECK(to_graph6(path(1)) == "@");
  CHECK(to_graph6(path(2)) == "A_");
  CHECK(to_graph6(path(3)) == "Bg");
  CHECK(to_graph6(cycle(3)) == "Bw");
  CHECK(from_graph6("@") == path(1));
  CHECK(from_graph6("A_") == path(2));
  CHECK(from_graph6("Bg") == path(3));
  CHECK(from_graph6("Bw") == cycle(3));
}

TEST_CASE("graph6 round-trips and agrees with the reference encoder") {
  std::vector<Graph> pool;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) pool.push_back(g);
  for (int n = 7; n <= 10; ++n)
    for (const Graph& g : enumerate_trees(n)) pool.push_back(g);
  for (int n : {13, 22}) {
    pool.push_back(path(n));
    pool.push_back(cycle(n));
  }
  pool.push_back(ghat(cycle(3)));
  for (const Graph& g : pool) {
    std::string code = to_graph6(g);
    CHECK(code == oracle::encode_graph6(g));
    CHECK(from_graph6(code) == g);
  }
}

TEST_CASE("graph6 decoder rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("~??"), std::invalid_argument);   // long form
  CHECK_THROWS_AS(from_graph6("A"), std::invalid_argument);     // missing body
  CHECK_THROWS_AS(from_graph6("A__"), std::invalid_argument);   // extra body
  CHECK_THROWS_AS(from_graph6("A`"), std::invalid_argument);    // nonzero padding
  CHECK_THROWS_AS(from_graph6("B\x20\x20"), std::invalid_argument);  // byte < 63
  CHECK_THROWS_AS(from_graph6("A_ "), std::invalid_argument);   // trailing junk
}

TEST_CASE("graph6 line reader skips comments and blanks") {
  std::istringstream in("# corpus\n@\n\nA_\n# done\nBw\n");
  auto graphs = read_graph6_lines(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == path(1));
  CHECK(graphs[1] == path(2));
  CHECK(graphs[2] == cycle(3));
}

TEST_CASE("edge list round-trip") {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  std::string text = to_edge_list(g);
  std::istringstream in(text);
  CHECK(from_edge_list(in) == g);

  std::istringstream direct("4 3\n0 1\n1 2\n2 3\n");
  CHECK(from_edge_list(direct) == path(4));

  std::istringstream bad_header("x 3\n");
  CHECK_THROWS_AS(from_edge_list(bad_header), std::invalid_argument);
  std::istringstream short_body("4 3\n0 1\n");
  CHECK_THROWS_AS(from_edge_list(short_body), std::invalid_argument);
}
