#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "isogame/generators.hpp"
#include "isogame/report.hpp"
#include "isogame/solver.hpp"

namespace isogame {

struct RunOptions {
  int jobs = 1;
  uint64_t seed = 12345;
  int max_n = 0;  // 0 = command default
};

struct NamedGraph {
  std::string source;
  Graph graph;
};

// generator specs: path:N, cycle:N, f:I, trees:N, connected:N, ghat:<spec>
std::vector<NamedGraph> make_graphs(const std::string& spec);
// existing file (graph6 lines, or edge list when the first line is "n m"),
// otherwise a generator spec
std::vector<NamedGraph> load_inputs(const std::string& spec_or_path);

// rebuilds a named policy for a given arena; arena_kind distinguishes the
// run_staller variants ("path"/"cycle"); hat layouts are derived from the
// graph order
Policy policy_by_name(const std::string& name, const Graph& g, const std::string& arena_kind);
Player player_from_string(const std::string& s);

Report cmd_verify_cycles(const RunOptions& opt);
Report cmd_verify_paths(const RunOptions& opt);
Report cmd_extremal_d(const RunOptions& opt);
// writes the five derived catalog graphs to catalog_out (empty = default
// data path) when the sweep confirms the expected family
Report cmd_extremal_s(const RunOptions& opt, const std::string& catalog_out = "");
Report cmd_verify_trees(const RunOptions& opt);
Report cmd_verify_ghat(const RunOptions& opt, std::vector<std::string> bases = {});
// source empty: mixed random instances (plain random / min degree 2 /
// disjoint unions of small connected pieces); otherwise a generator spec or
// graph6 file whose graphs are checked instead
Report cmd_fuzz(const RunOptions& opt, int count = 10000, const std::string& source = "");
Report cmd_solve(const std::vector<NamedGraph>& inputs, Player first, bool with_trace,
                 const RunOptions& opt);

// interactive loop: the human plays one side, the engine answers optimally;
// returns a process exit code
int play_session(const Graph& g, Player human_role, std::istream& in, std::ostream& out);

// recomputes every record's values from its stored graph6 and re-evaluates
// its pass flag; the self-certification backing `isogame recheck`
bool recheck_report(const Report& rep, std::string* why = nullptr);

}  // namespace isogame
