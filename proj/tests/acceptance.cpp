// Acceptance gate: one line per criterion, exit 1 when any fails.
// Everything here recomputes from scratch; nothing is read from cached
// reports except where reload/self-certification is itself the claim.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "isogame/enumerate.hpp"
#include "isogame/experiments.hpp"
#include "isogame/formulas.hpp"
#include "isogame/generators.hpp"
#include "isogame/io.hpp"
#include "isogame/residual.hpp"
#include "isogame/solver.hpp"
#include "isogame/strategies.hpp"
#include "support/oracles.hpp"

using namespace isogame;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string detail;
};

std::vector<Criterion> results;

void note(int id, const std::string& name, bool pass, const std::string& detail) {
  results.push_back(Criterion{id, name, pass, detail});
  std::cerr << "[criterion " << id << "] " << (pass ? "ok" : "FAILED") << " - " << detail << "\n";
}

struct SolvedGraph {
  Graph g;
  int d = 0;
  int s = 0;
};

std::string canon6(const Graph& g) { return to_graph6(graph_from_canonical(canonical_form(g))); }

uint64_t mix(uint64_t a, uint64_t b) {
  uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// every solved graph lands here; criterion 6 audits the whole registry
std::vector<SolvedGraph> registry;

SolvedGraph solve_both(const Graph& g) {
  GameSolver solver(g);
  SolvedGraph out{g, solver.value(VertexSet{}, Player::Dominator),
                  solver.value(VertexSet{}, Player::Staller)};
  registry.push_back(out);
  return out;
}

bool roundtrip_ok(const Graph& g) { return from_graph6(to_graph6(g)) == g; }

void criterion_cycles() {
  std::vector<std::string> bad;
  for (int n = 4; n <= 22; ++n) {
    SolvedGraph r = solve_both(cycle(n));
    if (r.d != formulas::cycle_d(n)) bad.push_back("C" + std::to_string(n) + " dominator-start");
    if (r.s != formulas::cycle_s(n)) bad.push_back("C" + std::to_string(n) + " staller-start");
  }
  note(1, "cycle game values match the closed formulas for 4 <= n <= 22", bad.empty(),
       bad.empty() ? "19 cycles, both starts exact" : "mismatch: " + bad.front());
}

void criterion_paths() {
  std::vector<std::string> bad;
  for (int n = 1; n <= 22; ++n) {
    SolvedGraph r = solve_both(path(n));
    if (r.d != formulas::path_d(n)) bad.push_back("P" + std::to_string(n) + " dominator-start");
    if (r.s != formulas::path_s(n)) bad.push_back("P" + std::to_string(n) + " staller-start");
    if (n >= 6) {
      bool bracket = formulas::path_bracket_low(n) <= r.d && r.d <= r.s &&
                     r.s <= formulas::path_bracket_high(n);
      if (!bracket) bad.push_back("P" + std::to_string(n) + " bracket");
    }
  }
  note(2, "path game values match the closed formulas for 1 <= n <= 22, with the n >= 6 bracket",
       bad.empty(), bad.empty() ? "22 paths exact, bracket holds" : "mismatch: " + bad.front());
}

// solved sweep of all connected graphs with 1..8 vertices, reused throughout
std::vector<std::vector<SolvedGraph>> sweep_by_order(9);

void criterion_extremal_d() {
  const long expected_counts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  const long factorial[] = {1, 1, 2, 6, 24, 120, 720, 5040};
  std::string fail;

  for (int n = 1; n <= 8 && fail.empty(); ++n) {
    std::cerr << "[criterion 3] solving all connected graphs of order " << n << "\n";
    auto& bucket = sweep_by_order[n];
    for (const Graph& g : enumerate_connected(n)) {
      if (!roundtrip_ok(g)) fail = "graph6 round-trip broke at n=" + std::to_string(n);
      bucket.push_back(solve_both(g));
    }
    if (static_cast<long>(bucket.size()) != expected_counts[n])
      fail = "class count at n=" + std::to_string(n) + " is " + std::to_string(bucket.size());
  }
  // the labeled oracle confirms the enumeration is complete and duplicate
  // free: sum of n!/|Aut(G)| over classes equals the labeled count
  for (int n = 2; n <= 7 && fail.empty(); ++n) {
    long labeled = 0;
    for (const SolvedGraph& r : sweep_by_order[n]) labeled += factorial[n] / oracle::automorphism_count(r.g);
    if (labeled != oracle::count_labeled_connected(n))
      fail = "orbit count disagrees with the labeled oracle at n=" + std::to_string(n);
  }
  for (int n = 2; n <= 6 && fail.empty(); ++n)
    if (oracle::count_connected_classes(n) != static_cast<long>(sweep_by_order[n].size()))
      fail = "permutation-minimal class count disagrees at n=" + std::to_string(n);

  std::set<std::string> hits;
  for (int n = 1; n <= 8; ++n)
    for (const SolvedGraph& r : sweep_by_order[n])
      if (2 * r.d == n) hits.insert(canon6(r.g));
  std::set<std::string> want{canon6(path(2)), canon6(cycle(6))};
  if (fail.empty() && hits != want) fail = "dominator-start extremal set has " + std::to_string(hits.size()) + " members";

  note(3, "over all 12113 connected graphs with up to 8 vertices, the dominator-start game "
          "needs n/2 moves exactly on K2 and C6",
       fail.empty(), fail.empty() ? "counts oracle-checked to n=7; extremal set is {K2, C6}" : fail);
}

void criterion_extremal_s() {
  std::string fail;
  std::vector<Graph> hits;
  std::map<int, int> by_order;
  for (int n = 1; n <= 8; ++n)
    for (const SolvedGraph& r : sweep_by_order[n])
      if (2 * r.s == n) {
        hits.push_back(r.g);
        ++by_order[n];
      }
  if (hits.size() != 11) fail = "found " + std::to_string(hits.size()) + " staller-start extremal graphs";
  std::map<int, int> want{{2, 1}, {4, 2}, {8, 8}};
  if (fail.empty() && by_order != want) fail = "per-order extremal counts are off";

  std::set<std::string> canon_hits;
  for (const Graph& g : hits) canon_hits.insert(canon6(g));
  for (int i = 1; i <= 6 && fail.empty(); ++i)
    if (!canon_hits.count(canon6(family_f(i))))
      fail = "hardcoded family member " + std::to_string(i) + " is not extremal";
  // the committed catalog holds exactly the five derived order-8 members
  for (int i = 7; i <= 11 && fail.empty(); ++i) {
    try {
      if (!canon_hits.count(canon6(family_f(i))))
        fail = "catalog graph " + std::to_string(i) + " is not extremal";
    } catch (const std::exception& e) {
      fail = e.what();
    }
  }
  note(4, "the staller-start game needs n/2 moves on exactly 11 graphs: one of order 2, "
          "two of order 4, eight of order 8",
       fail.empty(), fail.empty() ? "all 11 matched the stored family" : fail);
}

void criterion_half_bound() {
  std::string fail;
  long checked = 0;
  for (int n = 1; n <= 8; ++n)
    for (const SolvedGraph& r : sweep_by_order[n]) {
      ++checked;
      if (r.d > n / 2 || r.s > n / 2) fail = "half bound broke on " + to_graph6(r.g);
    }

  // disjoint unions: 2 or 3 connected pieces of order <= 6 each
  std::vector<Graph> pool;
  for (int n = 2; n <= 6; ++n)
    for (const SolvedGraph& r : sweep_by_order[n]) pool.push_back(r.g);
  for (int trial = 0; trial < 1000 && fail.empty(); ++trial) {
    std::mt19937_64 rng(mix(4242, trial));
    int parts = 2 + static_cast<int>(rng() % 2);
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (int p = 0; p < parts; ++p) {
      const Graph& piece = pool[rng() % pool.size()];
      for (auto [u, v] : piece.edges()) edges.emplace_back(offset + u, offset + v);
      offset += piece.order();
    }
    Graph g = Graph::from_edges(offset, edges);
    if (!roundtrip_ok(g)) fail = "graph6 round-trip broke on a union";
    SolvedGraph r = solve_both(g);
    ++checked;
    if (r.d > offset / 2 || r.s > offset / 2) fail = "half bound broke on " + to_graph6(g);
  }
  note(5, "both game values stay within half the order over the sweep and 1000 random "
          "disjoint unions",
       fail.empty(),
       fail.empty() ? std::to_string(checked) + " graphs within the half bound" : fail);
}

void criterion_near_equality() {
  std::string fail;
  for (const SolvedGraph& r : registry)
    if (std::abs(r.d - r.s) > 1) {
      fail = "gap " + std::to_string(r.d - r.s) + " on " + to_graph6(r.g);
      break;
    }
  note(6, "the two game values differ by at most one on every graph solved in this run",
       fail.empty(),
       fail.empty() ? std::to_string(registry.size()) + " solved graphs, all gaps <= 1" : fail);
}

void criterion_trees() {
  const long tree_counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  std::string fail;
  for (int n = 3; n <= 14 && fail.empty(); ++n)
    if (static_cast<long>(enumerate_trees(n).size()) != tree_counts[n])
      fail = "tree count at n=" + std::to_string(n) + " is off";
  for (int n = 3; n <= 9 && fail.empty(); ++n)
    if (oracle::count_free_trees_prufer(n) != tree_counts[n])
      fail = "sequence-decoded tree count disagrees at n=" + std::to_string(n);
  if (fail.empty()) {
    // labeled count over classes must give n^(n-2), tying the enumeration
    // to the sequence bijection at n = 10
    long labeled = 0;
    for (const Graph& t : enumerate_trees(10)) labeled += 3628800L / oracle::automorphism_count(t);
    if (labeled != 100000000L) fail = "labeled tree count at n=10 is off";
  }

  Policy tree_policy = tree_residual_dominator();
  long audited = 0;
  for (int n = 3; n <= 14 && fail.empty(); ++n) {
    std::cerr << "[criterion 7] trees of order " << n << "\n";
    for (const Graph& t : enumerate_trees(n)) {
      int bound = formulas::tree_bound(n);
      SolvedGraph r = solve_both(t);
      if (r.d > bound) {
        fail = "tree bound broke on " + to_graph6(t);
        break;
      }
      SolveResult pol = policy_vs_optimal(t, tree_policy, Player::Dominator, Player::Dominator);
      if (pol.value > bound) {
        fail = "staged policy ran past the bound on " + to_graph6(t);
        break;
      }
      StagedReplay replay = replay_staged(t, pol.principal_trace);
      if (!replay.stages_monotone) {
        fail = "stage went backwards on " + to_graph6(t);
        break;
      }
      for (const StagedMove& m : replay.moves) {
        int floor = m.mover == Player::Dominator ? (m.stage == 1 ? 17 : m.stage == 2 ? 15 : 11)
                                                 : (m.stage == 1 ? 5 : m.stage == 2 ? 7 : 11);
        if (m.xi < floor) {
          fail = "move dropped only " + std::to_string(m.xi) + " at stage " +
                 std::to_string(m.stage) + " on " + to_graph6(t);
          break;
        }
      }
      ++audited;
      if (!fail.empty()) break;
    }
  }
  note(7, "every tree with 3 to 14 vertices stays within floor(5n/11), and the staged "
          "strategy's weight drops meet their per-stage floors",
       fail.empty(),
       fail.empty() ? std::to_string(audited) + " trees solved, policy traces audited" : fail);
}

void criterion_hats() {
  std::string fail;
  // exact equality on bases small enough for the exact solver
  struct BaseCase {
    Graph base;
    const char* label;
  };
  std::vector<BaseCase> bases{{path(1), "K1"}, {path(2), "K2"}, {path(3), "P3"}, {cycle(3), "K3"}};
  for (const BaseCase& b : bases) {
    Graph g = ghat(b.base);
    int target = 3 * g.order() / 7;
    SolvedGraph r = solve_both(g);
    if (r.d != target || r.s != target) {
      fail = std::string("hat of ") + b.label + " missed 3n/7";
      break;
    }
  }
  if (fail.empty()) {
    // order 28 sits above the exact cap: pin the value between the two
    // guarantee policies instead
    Graph g = ghat(cycle(4));
    GhatLayout layout(4);
    int target = 3 * g.order() / 7;
    std::cerr << "[criterion 8] policy sandwich on the 28-vertex hat\n";
    for (Player first : {Player::Dominator, Player::Staller}) {
      int upper = policy_vs_optimal(g, ghat_dominator(layout), Player::Dominator, first).value;
      int lower = policy_vs_optimal(g, ghat_staller(layout), Player::Staller, first).value;
      if (!(upper <= target && target <= lower)) {
        fail = "sandwich failed: " + std::to_string(lower) + " .. " + std::to_string(upper);
        break;
      }
    }
  }
  note(8, "hat graphs hit 3n/7 exactly for one-, two- and three-vertex bases, and the "
          "28-vertex hat is pinned to 12 by the two guarantee policies",
       fail.empty(), fail.empty() ? "values 3, 6, 6, 9 exact; order-28 hat pinned" : fail);
}

void criterion_strategy_bounds() {
  std::string fail;
  Policy greedy = greedy_dominator();
  long games = 0;
  for (int n = 2; n <= 8 && fail.empty(); ++n) {
    std::cerr << "[criterion 9] greedy games at n=" << n << "\n";
    for (const SolvedGraph& r : sweep_by_order[n]) {
      for (Player first : {Player::Dominator, Player::Staller}) {
        ++games;
        if (policy_vs_optimal(r.g, greedy, Player::Dominator, first).value > n / 2) {
          fail = "greedy ran past n/2 on " + to_graph6(r.g);
          break;
        }
      }
      if (!fail.empty()) break;
    }
  }
  Policy stall = run_staller(ArenaKind::Cycle);
  Policy window_c = cycle_dominator();
  Policy window_p = path_dominator();
  for (int n = 6; n <= 22 && fail.empty(); ++n) {
    Graph c = cycle(n);
    if (policy_vs_optimal(c, stall, Player::Staller, Player::Dominator).value <
        formulas::run_staller_cycle_d_min(n))
      fail = "run staller fell short on C" + std::to_string(n) + " dominator-start";
    else if (policy_vs_optimal(c, stall, Player::Staller, Player::Staller).value <
             formulas::run_staller_cycle_s_min(n))
      fail = "run staller fell short on C" + std::to_string(n) + " staller-start";
    else if (policy_vs_optimal(c, window_c, Player::Dominator, Player::Dominator).value >
             formulas::window_dominator_cycle_d_max(n))
      fail = "window dominator ran past the cap on C" + std::to_string(n);
    else if (policy_vs_optimal(c, window_c, Player::Dominator, Player::Staller).value >
             formulas::window_dominator_cycle_s_max(n))
      fail = "window dominator ran past the staller-start cap on C" + std::to_string(n);
    if (fail.empty() && (n % 5 == 0 || n % 5 == 4)) {
      if (policy_vs_optimal(path(n), window_p, Player::Dominator, Player::Dominator).value >
          formulas::window_dominator_path_d_max(n))
        fail = "window dominator ran past the cap on P" + std::to_string(n);
    }
  }
  note(9, "greedy stays within n/2 on the whole sweep; the run and window policies meet "
          "their cycle and path guarantees for 6 <= n <= 22",
       fail.empty(), fail.empty() ? std::to_string(games) + " greedy games plus 17 arenas" : fail);
}

void criterion_conjectures() {
  std::vector<std::string> findings;
  long checked = 0;
  auto consider = [&](const Graph& g, int d, int s) {
    ++checked;
    int n = g.order();
    bool k2_free = true;
    for (VertexSet comp : components(g))
      if (comp.count() == 2) k2_free = false;
    if (k2_free && (d > formulas::conjecture_no_k2_bound(n) || s > formulas::conjecture_no_k2_bound(n)))
      findings.push_back(to_graph6(g) + " breaks the 3n/7 ceiling");
    if (g.min_degree() >= 2 && (!formulas::conjecture_min_degree_two_holds(d, n) ||
                                !formulas::conjecture_min_degree_two_holds(s, n)))
      findings.push_back(to_graph6(g) + " breaks 7*value <= 3n at min degree 2");
  };
  for (int n = 1; n <= 8; ++n)
    for (const SolvedGraph& r : sweep_by_order[n]) consider(r.g, r.d, r.s);

  for (int trial = 0; trial < 10000; ++trial) {
    if (trial % 2000 == 0) std::cerr << "[criterion 10] random graph " << trial << "\n";
    std::mt19937_64 rng(mix(777, trial));
    int n = 4 + static_cast<int>(rng() % 13);  // 4..16
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double p = 0.15 + 0.55 * coin(rng);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    // repair to minimum degree two with random extra links
    for (int v = 0; v < n; ++v)
      while (g.degree(v) < 2) {
        int other = static_cast<int>(rng() % n);
        if (other == v || g.adjacent(v, other)) continue;
        edges.emplace_back(v, other);
        g = Graph::from_edges(n, edges);
      }
    SolvedGraph r = solve_both(g);
    consider(g, r.d, r.s);
  }
  for (const std::string& f : findings) std::cout << "finding: " << f << "\n";
  // findings are reported, never asserted: the line stays green either way
  note(10, "conjecture fuzzing over the sweep plus 10000 random min-degree-2 graphs",
       true, std::to_string(checked) + " graphs checked, " + std::to_string(findings.size()) +
                 " findings (reported only)");
}

void criterion_infrastructure() {
  std::string fail;
  RunOptions serial;
  serial.max_n = 12;
  serial.jobs = 1;
  RunOptions threaded = serial;
  threaded.jobs = 3;
  json a = cmd_verify_cycles(serial).to_json();
  json b = cmd_verify_cycles(threaded).to_json();
  a.erase("runtime_ms");
  b.erase("runtime_ms");
  a["params"].erase("jobs");
  b["params"].erase("jobs");
  if (a != b) fail = "verify-cycles output depends on the job count";

  if (fail.empty()) {
    RunOptions f1;
    f1.max_n = 10;
    f1.seed = 31;
    RunOptions f4 = f1;
    f4.jobs = 4;
    json c = cmd_fuzz(f1, 80).to_json();
    json d = cmd_fuzz(f4, 80).to_json();
    c.erase("runtime_ms");
    d.erase("runtime_ms");
    c["params"].erase("jobs");
    d["params"].erase("jobs");
    if (c != d) fail = "fuzz output depends on the job count";
  }

  if (fail.empty()) {
    RunOptions opt;
    opt.max_n = 14;
    Report rep = cmd_verify_paths(opt);
    std::string wire = rep.to_json().dump();
    Report back = Report::from_json(json::parse(wire));
    std::string why;
    if (!recheck_report(back, &why)) fail = "reloaded report failed recheck: " + why;
    else if (!back.all_passed()) fail = "reloaded report lost its verdict";
  }

  if (fail.empty()) {
    for (const SolvedGraph& r : registry)
      if (!roundtrip_ok(r.g)) {
        fail = "graph6 round-trip broke on " + to_graph6(r.g);
        break;
      }
  }
  note(11, "graph6 round-trips on every solved graph; reports are identical across job "
           "counts and self-certify after a JSON reload",
       fail.empty(), fail.empty() ? "round-trips, job independence and recheck all clean" : fail);
}

}  // namespace

int main() {
  criterion_cycles();
  criterion_paths();
  criterion_extremal_d();
  criterion_extremal_s();
  criterion_half_bound();
  criterion_trees();
  criterion_hats();
  criterion_strategy_bounds();
  criterion_conjectures();
  criterion_infrastructure();
  criterion_near_equality();  // audits every solve done above

  std::sort(results.begin(), results.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
  bool all = true;
  for (const Criterion& c : results) {
    all = all && c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << " [" << c.detail
              << "]\n";
  }
  std::cout << (all ? "acceptance: all 11 criteria hold\n" : "acceptance: criteria failed\n");
  return all ? 0 : 1;
}
