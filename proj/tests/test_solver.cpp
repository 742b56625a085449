#include <algorithm>

#include "doctest.h"
#include "isogame/enumerate.hpp"
#include "isogame/generators.hpp"
#include "isogame/solver.hpp"
#include "support/oracles.hpp"

using namespace isogame;

TEST_CASE("game values on named graphs") {
  CHECK(game_value(path(1), Player::Dominator).value == 0);
  CHECK(game_value(path(1), Player::Staller).value == 0);
  CHECK(game_value(path(2), Player::Dominator).value == 1);
  CHECK(game_value(path(2), Player::Staller).value == 1);
  CHECK(game_value(path(5), Player::Dominator).value == 1);
  CHECK(game_value(path(5), Player::Staller).value == 2);
  CHECK(game_value(path(7), Player::Dominator).value == 3);
  CHECK(game_value(path(10), Player::Dominator).value == 3);
  CHECK(game_value(path(10), Player::Staller).value == 4);
  CHECK(game_value(cycle(4), Player::Dominator).value == 1);
  CHECK(game_value(cycle(4), Player::Staller).value == 1);
  CHECK(game_value(cycle(6), Player::Dominator).value == 3);
  CHECK(game_value(cycle(7), Player::Dominator).value == 3);
  CHECK(game_value(cycle(7), Player::Staller).value == 2);
  CHECK(game_value(cycle(9), Player::Staller).value == 3);
  CHECK(game_value(cycle(10), Player::Dominator).value == 4);
  CHECK(game_value(cycle(10), Player::Staller).value == 4);
}

TEST_CASE("solver agrees with the raw sequence recursion") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      CHECK(game_value(g, Player::Dominator).value ==
            oracle::sequence_game_value(g, VertexSet{}, Player::Dominator));
      CHECK(game_value(g, Player::Staller).value ==
            oracle::sequence_game_value(g, VertexSet{}, Player::Staller));
    }
  }
  // a couple of disconnected arenas
  Graph two_paths = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  CHECK(game_value(two_paths, Player::Dominator).value ==
        oracle::sequence_game_value(two_paths, VertexSet{}, Player::Dominator));
  Graph with_isolated = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(game_value(with_isolated, Player::Staller).value ==
        oracle::sequence_game_value(with_isolated, VertexSet{}, Player::Staller));
}

TEST_CASE("isolation number matches the subset oracle and lower-bounds the game") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      int iota = isolation_number(g);
      CHECK(iota == oracle::subset_isolation_number(g));
      CHECK(iota <= game_value(g, Player::Dominator).value);
      CHECK(iota <= game_value(g, Player::Staller).value);
    }
  }
  CHECK(isolation_number(cycle(6)) == 2);
  CHECK(isolation_number(path(5)) == 1);
  CHECK(isolation_number(cycle(10)) == 3);
}

TEST_CASE("the two game values never differ by more than one") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      GameSolver solver(g);
      int d = solver.value(VertexSet{}, Player::Dominator);
      int s = solver.value(VertexSet{}, Player::Staller);
      CHECK(std::abs(d - s) <= 1);
      CHECK(d <= n / 2);
      CHECK(s <= n / 2);
    }
  }
}

TEST_CASE("principal traces replay to the claimed value") {
  for (const Graph& g : {path(9), cycle(11), ghat(path(1))}) {
    for (Player first : {Player::Dominator, Player::Staller}) {
      SolveResult res = game_value(g, first);
      GameTrace t = res.principal_trace;
      CHECK(t.length() == res.value);
      annotate_trace(g, t);  // throws if any move is illegal
      VertexSet played;
      for (int v : t.moves) played.add(v);
      CHECK(is_terminal(g, g.closed_neighborhood(played)));
    }
  }
}

TEST_CASE("optimal move sets and tie-breaking") {
  Graph c6 = cycle(6);
  // every opening is symmetric on a cycle
  CHECK(optimal_moves(c6, VertexSet{}, Player::Dominator) == c6.vertices());
  GameSolver solver(c6);
  CHECK(solver.principal_trace(Player::Dominator).moves[0] == 0);

  Graph p5 = path(5);
  // only the middle vertex finishes in one move
  CHECK(optimal_moves(p5, VertexSet{}, Player::Dominator) == VertexSet::of({2}));
  Graph k2 = path(2);
  CHECK(optimal_moves(k2, VertexSet{}, Player::Staller) == VertexSet::of({0, 1}));
}

TEST_CASE("turn value gap examples") {
  CHECK(max_turn_value_gap(path(2)) == 0);
  // the empty position of P4 already separates the two starts
  CHECK(max_turn_value_gap(path(4)) == 1);
  int g6 = max_turn_value_gap(cycle(6));
  CHECK(g6 >= 0);
  CHECK(g6 <= 3);
}

TEST_CASE("solver enforces its order cap") {
  CHECK_THROWS_AS(GameSolver{path(25)}, std::invalid_argument);
  CHECK_NOTHROW(game_value(path(24), Player::Dominator));
  CHECK(game_value(path(24), Player::Dominator).value == 9);
}

TEST_CASE("solver reuses results across queries") {
  GameSolver solver(cycle(9));
  int first = solver.value(VertexSet{}, Player::Dominator);
  uint64_t seen = solver.states_visited();
  int second = solver.value(VertexSet{}, Player::Dominator);
  CHECK(first == second);
  CHECK(solver.states_visited() == seen);  // memo hit, no new states
}
