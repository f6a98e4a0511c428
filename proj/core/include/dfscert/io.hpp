#pragma once

#include <iosfwd>
#include <string>

#include "dfscert/graph.hpp"

namespace dfscert {

// Text format, ASCII, '\n' newlines:
//   dfsgraph 1 <n> <d> <0|1>
//   labels <l_1> ... <l_n>          label of vertex id i at position i
//   e <u> <v>                       one per undirected edge, u < v by id
//   a <u> <v>                       directed: arc u -> v
//   end
// Edge lines are sorted, so write o parse is the identity byte for byte.
void write_graph(std::ostream& out, const LabeledGraph& g);

LabeledGraph parse_graph(std::istream& in);

void save_graph_file(const std::string& path, const LabeledGraph& g);
LabeledGraph load_graph_file(const std::string& path);

}  // namespace dfscert
