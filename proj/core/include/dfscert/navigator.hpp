#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dfscert/oracle.hpp"

namespace dfscert {

// Result of a navigation step in the would-be DFS tree T (edges {p(v), v},
// children ascending by label). EndOfComponent models reaching the virtual
// vertex 0; Inconsistent is returned when the per-call query cap is hit on
// an input that cannot be a valid DFS numbering within that cost.
struct NavResult {
  enum Kind : std::uint8_t { Next, EndOfComponent, Inconsistent };
  Kind kind;
  VertexId vertex = 0;
  const char* reason = nullptr;  // set on Inconsistent

  static NavResult next(VertexId v) { return {Next, v, nullptr}; }
  static NavResult end_of_component() { return {EndOfComponent, 0, nullptr}; }
  static NavResult inconsistent(const char* why) { return {Inconsistent, 0, why}; }
};

// p(v) through the oracle: (parent label, parent vertex). Parent vertex is 0
// when p(v) = 0. Directed graphs look at in-neighbors.
std::pair<Label, VertexId> probe_parent(GraphOracle& o, VertexId v);

// Neighbors w of u with p(w) = label(u), sorted ascending by label.
// Directed graphs scan out-neighbors. Costs O(d^2) queries.
std::vector<std::pair<Label, VertexId>> tree_children(GraphOracle& o, VertexId u);

// Successor / predecessor of v in the canonical DFS pre-order of T.
// `call_cap` bounds the oracle queries spent inside this one call.
NavResult tree_next(GraphOracle& o, VertexId v, std::uint64_t call_cap);
NavResult tree_prev(GraphOracle& o, VertexId v, std::uint64_t call_cap);

// On valid numberings these locate vertex label(v)+1 / label(v)-1; they are
// the tree walks above, named for how the testers use them.
inline NavResult dfs_next(GraphOracle& o, VertexId v, std::uint64_t call_cap) {
  return tree_next(o, v, call_cap);
}
inline NavResult dfs_prev(GraphOracle& o, VertexId v, std::uint64_t call_cap) {
  return tree_prev(o, v, call_cap);
}

}  // namespace dfscert
