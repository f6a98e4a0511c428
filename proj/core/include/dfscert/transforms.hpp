#pragma once

#include <cstdint>
#include <utility>

#include "dfscert/graph.hpp"
#include "dfscert/oracle.hpp"
#include "dfscert/verdict.hpp"

namespace dfscert {

// p^FIN(v): smallest neighbor label above v, or infinite.
struct FinParent {
  bool infinite;
  Label value;  // meaningful when !infinite
  bool operator==(const FinParent&) const = default;
};

// Reduces the maximum degree of a validly numbered graph from its declared
// bound d to d - 1 with at most 3 * |V_d| edits, preserving validity and
// per-component connectivity. Requires d >= 3.
std::pair<LabeledGraph, EditList> degree_reduce(const LabeledGraph& g);

// Iterates degree_reduce down to bound d_star (>= 3).
std::pair<LabeledGraph, EditList> degree_reduce_to(const LabeledGraph& g, std::uint32_t d_star);

// Same edges, labels replaced by n+1-label. Undirected only: the FIN/DFS
// reversal correspondence fails on directed graphs.
LabeledGraph reverse_numbering(const LabeledGraph& g);

FinParent fin_parent(const LabeledGraph& g, Label v);

// Valid FIN numbering iff the reverse numbering is a valid DFS numbering.
Verdict check_fin(const LabeledGraph& g);

}  // namespace dfscert
