#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isogame/experiments.hpp"
#include "isogame/io.hpp"

using namespace isogame;

namespace {

struct Common {
  RunOptions opt;
  std::string out;
  std::string format = "json";
};

void attach_common(CLI::App* cmd, Common& c, bool with_max_n = true) {
  cmd->add_option("--jobs", c.opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "write the report here instead of stdout");
  cmd->add_option("--format", c.format, "report format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--seed", c.opt.seed, "rng seed");
  if (with_max_n) cmd->add_option("--max-n", c.opt.max_n, "largest order to cover");
}

// writes the report and turns it into the process exit code: 0 when every
// assertion held, 1 otherwise; conjecture findings stay in the summary
int emit(const Report& rep, const Common& c) {
  std::string body = c.format == "csv"    ? rep.to_csv()
                     : c.format == "text" ? rep.to_text()
                                          : rep.to_json().dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << body;
    std::cout << rep.experiment << ": report written to " << c.out << "\n";
  }
  if (!rep.all_passed()) {
    std::cerr << rep.experiment << ": assertions failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and verification suite for the isolation game"};
  app.require_subcommand(1);
  int rc = 0;

  Common c_cycles;
  auto* cycles = app.add_subcommand(
      "verify-cycles", "cycle game values against the closed formulas, plus both strategies");
  attach_common(cycles, c_cycles);
  cycles->callback([&] { rc = emit(cmd_verify_cycles(c_cycles.opt), c_cycles); });

  Common c_paths;
  auto* paths = app.add_subcommand(
      "verify-paths", "path game values against the closed formulas, plus both strategies");
  attach_common(paths, c_paths);
  paths->callback([&] { rc = emit(cmd_verify_paths(c_paths.opt), c_paths); });

  Common c_exd;
  auto* exd = app.add_subcommand(
      "extremal-d", "sweep all connected graphs for those needing n/2 moves, Dominator start");
  attach_common(exd, c_exd);
  exd->callback([&] { rc = emit(cmd_extremal_d(c_exd.opt), c_exd); });

  Common c_exs;
  std::string catalog_out;
  auto* exs = app.add_subcommand(
      "extremal-s", "sweep for the Staller-start n/2 family and write the derived catalog");
  attach_common(exs, c_exs);
  exs->add_option("--catalog", catalog_out, "where to write the five derived catalog graphs");
  exs->callback([&] { rc = emit(cmd_extremal_s(c_exs.opt, catalog_out), c_exs); });

  Common c_trees;
  auto* trees = app.add_subcommand(
      "verify-trees", "every tree against the 5n/11 bound with staged weight audits");
  attach_common(trees, c_trees);
  trees->callback([&] { rc = emit(cmd_verify_trees(c_trees.opt), c_trees); });

  Common c_ghat;
  std::vector<std::string> bases;
  auto* vghat = app.add_subcommand(
      "verify-ghat", "hat graphs hit 3n/7 exactly: solved where possible, policy sandwich above");
  attach_common(vghat, c_ghat, false);
  vghat->add_option("--base", bases, "base graph specs (default: path:1..3, cycle:3, cycle:4)");
  vghat->callback([&] { rc = emit(cmd_verify_ghat(c_ghat.opt, bases), c_ghat); });

  Common c_fuzz;
  std::string fuzz_source;
  int fuzz_count = 10000;
  auto* fuzz = app.add_subcommand(
      "fuzz", "random or given graphs: proven bounds asserted, conjectures reported as findings");
  attach_common(fuzz, c_fuzz);
  fuzz->add_option("source", fuzz_source, "generator spec or graph file (default: random mix)");
  fuzz->add_option("--count", fuzz_count, "instances to generate or keep")
      ->check(CLI::PositiveNumber);
  fuzz->callback([&] { rc = emit(cmd_fuzz(c_fuzz.opt, fuzz_count, fuzz_source), c_fuzz); });

  Common c_solve;
  std::string solve_input, solve_first = "dominator";
  bool solve_trace = false;
  auto* solve = app.add_subcommand("solve", "batch-solve graphs from a file or generator spec");
  attach_common(solve, c_solve, false);
  solve->add_option("input", solve_input, "graph6/edge-list file or generator spec")->required();
  solve->add_option("--first", solve_first, "who moves first")
      ->check(CLI::IsMember({"dominator", "staller", "d", "s"}));
  solve->add_flag("--trace", solve_trace, "store the principal trace of each graph");
  solve->callback([&] {
    rc = emit(cmd_solve(load_inputs(solve_input), player_from_string(solve_first), solve_trace,
                        c_solve.opt),
              c_solve);
  });

  std::string play_spec, play_as = "staller";
  auto* play = app.add_subcommand("play", "play one side against optimal replies");
  play->add_option("graph", play_spec, "graph6/edge-list file or generator spec")->required();
  play->add_option("--as", play_as, "side you play")
      ->check(CLI::IsMember({"dominator", "staller", "d", "s"}));
  play->callback([&] {
    std::vector<NamedGraph> gs = load_inputs(play_spec);
    if (gs.size() != 1)
      throw std::invalid_argument("play needs exactly one graph, got " +
                                  std::to_string(gs.size()));
    rc = play_session(gs[0].graph, player_from_string(play_as), std::cin, std::cout);
  });

  std::string enum_spec, enum_out;
  auto* enumerate = app.add_subcommand("enumerate", "emit the graphs of a generator spec");
  enumerate->add_option("spec", enum_spec, "generator spec, e.g. trees:9")->required();
  enumerate->add_option("--out", enum_out, "write graph6 lines here instead of stdout");
  enumerate->callback([&] {
    std::vector<NamedGraph> gs = make_graphs(enum_spec);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!enum_out.empty()) {
      file.open(enum_out);
      if (!file) throw std::runtime_error("cannot write " + enum_out);
      out = &file;
    }
    for (const NamedGraph& g : gs) *out << to_graph6(g.graph) << "\n";
    std::cerr << enum_spec << ": " << gs.size() << " graphs\n";
  });

  std::string recheck_path;
  auto* recheck = app.add_subcommand(
      "recheck", "recompute every record of a stored report from its graph6");
  recheck->add_option("report", recheck_path, "report JSON file")->required();
  recheck->callback([&] {
    std::ifstream in(recheck_path);
    if (!in) throw std::runtime_error("cannot open " + recheck_path);
    Report rep = Report::from_json(json::parse(in));
    std::string why;
    if (recheck_report(rep, &why)) {
      std::cout << recheck_path << ": " << rep.records.size() << " records recheck clean\n";
    } else {
      std::cerr << recheck_path << ": " << why << "\n";
      rc = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are 2, --help is 0
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
