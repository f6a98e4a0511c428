#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dfscert/graph.hpp"
#include "dfscert/oracle.hpp"
#include "dfscert/verdict.hpp"

namespace dfscert {

// Every tunable in one place. Zeros mean "derive from n and d":
// ell defaults to ceil(n^{1/3}), c_global to ceil(10 * sqrt(200 d)).
struct TesterParams {
  double epsilon = 0.1;
  std::uint32_t ell = 0;
  std::uint32_t c_local = 60;
  std::uint32_t c_global = 0;
  std::uint32_t c_simple = 6;
  std::uint32_t budget_factor = 10;
  std::uint64_t seed = 0;
  bool allow_fallback = true;  // exact check when the plan costs >= d*n
};

// Concrete sample plan for a given (n, d).
struct ResolvedParams {
  std::uint32_t ell = 1;
  std::uint64_t vertex_samples = 0;   // per local vertex test (L1, L2)
  std::uint64_t edge_samples = 0;     // L3
  std::uint64_t global_samples = 0;   // s, for vertices and for edges
  bool global_cube_branch = false;    // s came from the (d/eps)^3 floor
  std::uint64_t nav_call_cap = 0;     // per navigation call, 4 d^2 ell
  std::uint64_t nominal = 0;          // planned probe count, drives fallback
  std::uint64_t hard_cap = 0;         // absolute query ceiling for combined
};

ResolvedParams resolve_params(const TesterParams& p, std::uint32_t n, std::uint32_t d);

// Conflict types against locality ell; not mutually exclusive, global iff none.
struct ConflictType {
  bool l1 = false, l2 = false, l3 = false;
  bool global() const { return !(l1 || l2 || l3); }
};

ConflictType classify_conflict(const LabeledGraph& g, const ConflictingPair& c, std::uint32_t ell);

// Local-conflict testers: sampled forward/backward walks along the implied
// DFS order. One-sided: every Reject carries a checkable witness; budget or
// cap exhaustion inside a probe accepts that probe.
Verdict test_l1(GraphOracle& o, const TesterParams& p);
Verdict test_l2(GraphOracle& o, const TesterParams& p);
Verdict test_l3(GraphOracle& o, const TesterParams& p);

// Global-conflict tester: sampled (p(v), v) and (u, w) intervals through the
// sweep-line decider.
Verdict test_global(GraphOracle& o, const TesterParams& p);

// L1 + L2 + L3 + global; rejects iff one of them does. Falls back to an
// exact check through the oracle when the sampling plan would cost more
// than reading the whole graph.
Verdict test_combined(GraphOracle& o, const TesterParams& p);

// O(sqrt(n/eps)) tester: sampled vertices and edges, one sweep.
Verdict test_simple(GraphOracle& o, const TesterParams& p);

// test_combined over a label-reversing oracle == FIN-numbering test.
// The oracle must have been constructed with reverse_labels = true.
Verdict test_fin(GraphOracle& o, const TesterParams& p);

// Single-probe entry points, used by tests to drive a chosen vertex/edge.
Verdict walk_from_parent(GraphOracle& o, VertexId v, const ResolvedParams& rp);
Verdict walk_backwards_from_vertex(GraphOracle& o, VertexId v, const ResolvedParams& rp);
Verdict walk_backwards_from_edge(GraphOracle& o, VertexId w_vertex, Label u_label, Label w_label,
                                 const ResolvedParams& rp);

}  // namespace dfscert
