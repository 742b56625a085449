#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "isogame/enumerate.hpp"
#include "isogame/experiments.hpp"
#include "isogame/io.hpp"
#include "isogame/solver.hpp"
#include "isogame/strategies.hpp"

namespace py = pybind11;
using namespace isogame;

namespace {

VertexSet set_of(const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) s.add(v);
  return s;
}

std::vector<int> list_of(VertexSet s) { return std::vector<int>(s.begin(), s.end()); }

py::dict result_dict(const SolveResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["moves"] = r.principal_trace.moves;
  d["states_visited"] = r.states_visited;
  return d;
}

// reports cross into python as JSON text; the schema is the same one the CLI
// writes
std::string report_json(const Report& rep) { return rep.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact solver and verification suite for the isolation game";

  py::class_<Graph>(m, "Graph")
      .def_static("from_edges",
                  [](int n, const std::vector<std::pair<int, int>>& edges) {
                    return Graph::from_edges(n, edges);
                  })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def_property_readonly("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream out;
        out << "Graph(n=" << g.order() << ", graph6=" << to_graph6(g) << ")";
        return out.str();
      });

  m.def("from_graph6", &from_graph6);
  m.def("to_graph6", &to_graph6);
  m.def("path", &path);
  m.def("cycle", &cycle);
  m.def("family_f", &family_f, py::arg("i"), py::arg("catalog_path") = "");
  m.def("ghat", &ghat);
  m.def("enumerate_connected", &enumerate_connected);
  m.def("enumerate_trees", &enumerate_trees);
  m.def("canonical_graph6",
        [](const Graph& g) { return to_graph6(graph_from_canonical(canonical_form(g))); });

  m.def("white_set",
        [](const Graph& g, const std::vector<int>& m_) { return list_of(white_set(g, set_of(m_))); });
  m.def("playable",
        [](const Graph& g, const std::vector<int>& m_) { return list_of(playable(g, set_of(m_))); });
  m.def("is_terminal",
        [](const Graph& g, const std::vector<int>& m_) { return is_terminal(g, set_of(m_)); });
  m.def("marked_set",
        [](const Graph& g, const std::vector<int>& m_) { return list_of(marked_set(g, set_of(m_))); });

  m.def("game_value", [](const Graph& g, const std::string& first) {
    return result_dict(game_value(g, player_from_string(first)));
  });
  m.def("isolation_number", &isolation_number);
  m.def("max_turn_value_gap", &max_turn_value_gap);
  m.def("optimal_moves",
        [](const Graph& g, const std::vector<int>& dominated, const std::string& to_move) {
          return list_of(optimal_moves(g, set_of(dominated), player_from_string(to_move)));
        });
  m.def("policy_vs_optimal",
        [](const Graph& g, const std::string& policy, const std::string& arena,
           const std::string& policy_player, const std::string& first) {
          return result_dict(policy_vs_optimal(g, policy_by_name(policy, g, arena),
                                               player_from_string(policy_player),
                                               player_from_string(first)));
        },
        py::arg("graph"), py::arg("policy"), py::arg("arena") = "general",
        py::arg("policy_player") = "dominator", py::arg("first") = "dominator");

  m.def("make_graphs", [](const std::string& spec) {
    std::vector<std::pair<std::string, Graph>> out;
    for (NamedGraph& g : make_graphs(spec)) out.emplace_back(g.source, g.graph);
    return out;
  });

  m.def("verify_cycles", [](int max_n, int jobs) {
    return report_json(cmd_verify_cycles({jobs, 12345, max_n}));
  }, py::arg("max_n") = 0, py::arg("jobs") = 1);
  m.def("verify_paths", [](int max_n, int jobs) {
    return report_json(cmd_verify_paths({jobs, 12345, max_n}));
  }, py::arg("max_n") = 0, py::arg("jobs") = 1);
  m.def("extremal_d", [](int max_n, int jobs) {
    return report_json(cmd_extremal_d({jobs, 12345, max_n}));
  }, py::arg("max_n") = 0, py::arg("jobs") = 1);
  m.def("extremal_s", [](const std::string& catalog_out, int max_n, int jobs) {
    return report_json(cmd_extremal_s({jobs, 12345, max_n}, catalog_out));
  }, py::arg("catalog_out") = "", py::arg("max_n") = 0, py::arg("jobs") = 1);
  m.def("verify_trees", [](int max_n, uint64_t seed, int jobs) {
    return report_json(cmd_verify_trees({jobs, seed, max_n}));
  }, py::arg("max_n") = 0, py::arg("seed") = 12345, py::arg("jobs") = 1);
  m.def("verify_ghat", [](const std::vector<std::string>& bases, int jobs) {
    return report_json(cmd_verify_ghat({jobs, 12345, 0}, bases));
  }, py::arg("bases") = std::vector<std::string>{}, py::arg("jobs") = 1);
  m.def("fuzz", [](int count, const std::string& source, int max_n, uint64_t seed, int jobs) {
    return report_json(cmd_fuzz({jobs, seed, max_n}, count, source));
  }, py::arg("count") = 1000, py::arg("source") = "", py::arg("max_n") = 0,
     py::arg("seed") = 12345, py::arg("jobs") = 1);
  m.def("solve", [](const std::string& input, const std::string& first, bool trace, int jobs) {
    return report_json(cmd_solve(load_inputs(input), player_from_string(first), trace,
                                 {jobs, 12345, 0}));
  }, py::arg("input"), py::arg("first") = "dominator", py::arg("trace") = false,
     py::arg("jobs") = 1);
  m.def("recheck", [](const std::string& report_json_text) {
    std::string why;
    bool ok = recheck_report(Report::from_json(json::parse(report_json_text)), &why);
    return py::make_tuple(ok, why);
  });
}
