#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isogame/graph.hpp"

namespace isogame {

// graph6, short form only (n <= 62 upstream; n <= 32 here). Header byte is
// n + 63; body packs the upper triangle in column order x01, x02, x12, x03,
// ... six bits per byte, big-endian within the byte, +63, zero padded.
std::string to_graph6(const Graph& g);
// rejects long-form headers, bytes outside [63, 126], wrong length and
// nonzero padding
Graph from_graph6(const std::string& s);

// one graph6 code per line; '#' lines and blank lines are skipped
std::vector<Graph> read_graph6_lines(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

// edge list text: first line "n m", then m lines "u v", 0-indexed
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

}  // namespace isogame
