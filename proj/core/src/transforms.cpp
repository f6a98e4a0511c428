#include "dfscert/transforms.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dfscert/exact.hpp"

namespace dfscert {

namespace {

// Work in label space with mutable neighbor sets.
std::vector<std::set<Label>> label_adjacency(const LabeledGraph& g) {
  std::vector<std::set<Label>> nbr(g.n() + 1);
  for (auto [u, w] : g.edge_labels()) {
    nbr[u].insert(w);
    nbr[w].insert(u);
  }
  return nbr;
}

}  // namespace

std::pair<LabeledGraph, EditList> degree_reduce(const LabeledGraph& g) {
  if (g.directed()) throw DirectedUnsupported("degree reduction is defined for undirected graphs");
  const std::uint32_t d = g.degree_bound();
  if (d < 3) throw DegreeBoundTooSmall("degree reduction needs d >= 3");
  if (!check_by_conflicts(g).accepted) {
    throw InvalidInput("degree reduction requires a valid DFS numbering");
  }

  auto nbr = label_adjacency(g);
  EditList edits;
  auto remove_edge = [&](Label a, Label b) {
    nbr[a].erase(b);
    nbr[b].erase(a);
    edits.push_back(Edit{Edit::Delete, std::min(a, b), std::max(a, b)});
  };
  auto add_edge = [&](Label a, Label b) {
    nbr[a].insert(b);
    nbr[b].insert(a);
    edits.push_back(Edit{Edit::Insert, std::min(a, b), std::max(a, b)});
  };

  // Ascending label order; degrees only ever drop below d elsewhere, so a
  // single pass suffices.
  for (Label v = 1; v <= g.n(); ++v) {
    if (nbr[v].size() != d) continue;
    auto below_end = nbr[v].lower_bound(v);
    std::size_t below = static_cast<std::size_t>(std::distance(nbr[v].begin(), below_end));
    if (below >= 2) {
      // smallest low neighbor u satisfies u < p(v); the back edge {u, v} can go
      remove_edge(*nbr[v].begin(), v);
      continue;
    }
    // At most one neighbor below v, hence k = d - below >= 2 above it.
    Label uk = *nbr[v].rbegin();
    Label w = uk - 1;
    remove_edge(v, uk);
    if (!nbr[w].count(uk)) {
      bool w_had_single_neighbor = nbr[w].size() == 1;
      add_edge(w, uk);
      if (!w_had_single_neighbor) {
        // All of w's prior neighbors sit below it; drop its smallest one.
        remove_edge(*nbr[w].begin(), w);
      }
    }
  }

  LabeledGraph out = apply_edits(g, edits, /*transitional=*/false, d - 1);
  return {out, edits};
}

std::pair<LabeledGraph, EditList> degree_reduce_to(const LabeledGraph& g, std::uint32_t d_star) {
  if (d_star < 3) throw DegreeBoundTooSmall("target degree bound must be at least 3");
  if (g.degree_bound() <= d_star) return {g, {}};
  LabeledGraph cur = g;
  EditList edits;
  while (cur.degree_bound() > d_star) {
    auto [next, step] = degree_reduce(cur);
    edits.insert(edits.end(), step.begin(), step.end());
    cur = std::move(next);
  }
  return {cur, edits};
}

LabeledGraph reverse_numbering(const LabeledGraph& g) {
  if (g.directed()) {
    throw DirectedUnsupported("reversal only preserves DFS structure on undirected graphs");
  }
  std::vector<Label> labels(g.n());
  for (VertexId v = 1; v <= g.n(); ++v) labels[v - 1] = g.n() + 1 - g.label_of(v);
  std::vector<std::pair<VertexId, VertexId>> edges = g.edge_ids();
  return LabeledGraph::build_by_id(g.n(), g.degree_bound(), edges, labels, false);
}

FinParent fin_parent(const LabeledGraph& g, Label v) {
  if (g.directed()) throw DirectedUnsupported("FIN parent is an undirected notion here");
  VertexId x = g.vertex_of(v);
  Label best = 0;
  for (VertexId nb : g.neighbors(x)) {
    Label l = g.label_of(nb);
    if (l > v && (best == 0 || l < best)) best = l;
  }
  if (best == 0) return {true, 0};
  return {false, best};
}

Verdict check_fin(const LabeledGraph& g) {
  return check_by_conflicts(reverse_numbering(g));
}

}  // namespace dfscert
