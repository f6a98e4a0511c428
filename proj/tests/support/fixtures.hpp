#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "dfscert/graph.hpp"

namespace dfscert::testsupport {

// Shared fixtures used across the suites.
inline LabeledGraph p3() {
  return LabeledGraph::build(3, 2, {{1, 2}, {2, 3}}, {1, 2, 3});
}

inline LabeledGraph ga() {
  return LabeledGraph::build(4, 3, {{1, 2}, {1, 3}, {2, 4}}, {1, 2, 3, 4});
}

inline LabeledGraph star5() {
  return LabeledGraph::build(5, 4, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}, {1, 2, 3, 4, 5});
}

inline LabeledGraph r3() {
  // path v1-v2-v3 with labels 3,2,1 along the chain
  return LabeledGraph::build_by_id(3, 2, {{1, 2}, {2, 3}}, {3, 2, 1});
}

// Brute-force conflict enumeration straight from the definition: every
// (vertex, edge) pair checked against p(v) < u < v < w.
inline std::vector<ConflictingPair> brute_conflicts(const LabeledGraph& g) {
  std::vector<Label> p = all_parent_labels(g);
  std::vector<ConflictingPair> out;
  std::vector<LabelEdge> edges = g.edge_labels();
  for (Label v = 1; v <= g.n(); ++v) {
    for (auto e : edges) {
      Label u = std::min(e.first, e.second), w = std::max(e.first, e.second);
      if (g.directed() && e.first > e.second) continue;
      if (p[v] < u && u < v && v < w) out.push_back({v, u, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force counterpart of the sweep-line decider.
inline std::optional<ConflictingPair> brute_subset_conflict(
    const std::vector<std::pair<Label, Label>>& vertex_intervals,
    const std::vector<LabelEdge>& edge_intervals) {
  for (auto [p1, v1] : vertex_intervals) {
    for (auto [u, w] : edge_intervals) {
      if (p1 < u && u < v1 && v1 < w) return ConflictingPair{v1, u, w};
    }
    for (auto [p2, v2] : vertex_intervals) {
      if (p2 == kVirtualParent) continue;
      if (p1 < p2 && p2 < v1 && v1 < v2) return ConflictingPair{v1, p2, v2};
    }
  }
  return std::nullopt;
}

// All undirected graphs on n identity-labeled vertices whose degrees stay
// within d, enumerated by edge subset.
inline std::vector<LabeledGraph> all_identity_graphs(std::uint32_t n, std::uint32_t d) {
  std::vector<LabelEdge> slots;
  for (Label a = 1; a <= n; ++a) {
    for (Label b = a + 1; b <= n; ++b) slots.push_back({a, b});
  }
  std::vector<Label> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = i + 1;
  std::vector<LabeledGraph> out;
  for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
    std::vector<LabelEdge> edges;
    std::vector<std::uint32_t> deg(n + 1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < slots.size() && ok; ++i) {
      if (!(mask & (1ULL << i))) continue;
      edges.push_back(slots[i]);
      if (++deg[slots[i].first] > d || ++deg[slots[i].second] > d) ok = false;
    }
    if (!ok) continue;
    out.push_back(LabeledGraph::build(n, d, edges, labels));
  }
  return out;
}

}  // namespace dfscert::testsupport
