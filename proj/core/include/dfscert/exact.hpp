#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dfscert/graph.hpp"
#include "dfscert/verdict.hpp"

namespace dfscert {

// Accept iff no conflicting pair exists; Reject carries the
// lexicographically first conflict.
Verdict check_by_conflicts(const LabeledGraph& g);

// Independent checker: simulates discovery in label order, keeping the white
// path as a stack. To discover k it pops actives down to p(k), verifying each
// popped vertex has no neighbor beyond k.
Verdict check_by_simulation(const LabeledGraph& g);

// Sweep-line decider over vertex intervals (p(v), v) and edge intervals
// (u, w): reports a conflicting pair among V' x (E' united with the parent
// edges of V'), or nullopt for no conflict. sort(|V'| + |E'|) time.
std::optional<ConflictingPair> sweepline_conflicts(
    std::vector<std::pair<Label, Label>> vertex_intervals, std::vector<LabelEdge> edge_intervals);

struct SweepEvent {
  Label position;
  bool is_end;      // end events sort before start events at equal position
  bool is_vertex;   // vertex interval vs edge interval
  Label sibling;    // the interval's other endpoint; equal-kind ties sort by
                    // decreasing sibling
};

// Adding {v-1, v} resolves every conflict involving v and creates none.
EditList fix_vertex(const LabeledGraph& g, Label v);

// Removing {u, w} and adding {w-1, w} resolves every conflict involving the
// edge and creates none.
EditList fix_edge(const LabeledGraph& g, LabelEdge e);

// Fixes over a greedy vertex cover of the conflict graph (both sides of a
// maximum matching), then degree restoration. Output accepts and respects
// the original degree bound.
std::pair<LabeledGraph, EditList> repair(const LabeledGraph& g);

// Exact navigation in the p-tree, label space. nullopt = end of component.
std::optional<Label> exact_dfs_next(const LabeledGraph& g, Label v);
std::optional<Label> exact_dfs_prev(const LabeledGraph& g, Label v);

}  // namespace dfscert
