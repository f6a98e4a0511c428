#include "dfscert/exact.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "dfscert/transforms.hpp"

namespace dfscert {

std::string describe_witness(const Witness& w) {
  if (const auto* c = std::get_if<ConflictingPair>(&w)) {
    return "conflict v=" + std::to_string(c->v) + " edge={" + std::to_string(c->u) + "," +
           std::to_string(c->w) + "}";
  }
  const auto& ov = std::get<OrderViolation>(w);
  return "order-violation at=" + std::to_string(ov.at) + " dir=" + (ov.forward ? "next" : "prev");
}

Verdict check_by_conflicts(const LabeledGraph& g) {
  if (auto c = first_conflict(g)) return Verdict::reject(*c);
  return Verdict::accept();
}

Verdict check_by_simulation(const LabeledGraph& g) {
  const std::uint32_t n = g.n();
  std::vector<Label> p = all_parent_labels(g);

  // Largest label reachable over one edge; out-edges for directed graphs
  // (a finished vertex must have explored all of them).
  std::vector<Label> max_nb(n + 1, 0);
  for (VertexId v = 1; v <= n; ++v) {
    Label lv = g.label_of(v);
    auto ns = g.directed() ? g.out_neighbors(v) : g.neighbors(v);
    for (VertexId w : ns) max_nb[lv] = std::max(max_nb[lv], g.label_of(w));
  }

  std::vector<Label> stack{kVirtualParent};
  for (Label k = 1; k <= n; ++k) {
    Label last_popped = 0;
    while (stack.back() > p[k]) {
      last_popped = stack.back();
      stack.pop_back();
      // last_popped finishes before k is discovered, so its whole
      // neighborhood must already be numbered below k.
      if (max_nb[last_popped] > k) {
        return Verdict::reject(ConflictingPair{k, last_popped, max_nb[last_popped]});
      }
    }
    if (stack.back() != p[k]) {
      // p(k) is not on the white path; the pop that jumped past it
      // witnesses the contradiction.
      return Verdict::reject(ConflictingPair{last_popped, p[k], k});
    }
    stack.push_back(k);
  }
  return Verdict::accept();
}

std::optional<ConflictingPair> sweepline_conflicts(
    std::vector<std::pair<Label, Label>> vertex_intervals, std::vector<LabelEdge> edge_intervals) {
  std::sort(vertex_intervals.begin(), vertex_intervals.end(),
            [](auto& a, auto& b) { return a.second < b.second; });
  vertex_intervals.erase(std::unique(vertex_intervals.begin(), vertex_intervals.end(),
                                     [](auto& a, auto& b) { return a.second == b.second; }),
                         vertex_intervals.end());
  std::sort(edge_intervals.begin(), edge_intervals.end());
  edge_intervals.erase(std::unique(edge_intervals.begin(), edge_intervals.end()),
                       edge_intervals.end());

  std::vector<SweepEvent> events;
  events.reserve(2 * vertex_intervals.size() + edge_intervals.size());
  for (auto [pv, v] : vertex_intervals) {
    events.push_back({pv, false, true, v});
    events.push_back({v, true, true, pv});
  }
  for (auto [u, w] : edge_intervals) {
    events.push_back({u, false, false, w});
    // edge-interval end events require no action and are omitted
  }
  std::sort(events.begin(), events.end(), [](const SweepEvent& a, const SweepEvent& b) {
    if (a.position != b.position) return a.position < b.position;
    if (a.is_end != b.is_end) return a.is_end;  // end before start
    if (a.sibling != b.sibling) return a.sibling > b.sibling;
    return a.is_vertex && !b.is_vertex;
  });

  // Active vertex intervals as a stack with the minimum v on top; a start
  // event only ever inserts below the current minimum or reports a conflict.
  std::vector<std::pair<Label, Label>> active;  // (v, p(v))
  for (const SweepEvent& ev : events) {
    if (ev.is_vertex && ev.is_end) {
      assert(!active.empty() && active.back().first == ev.position);
      active.pop_back();
    } else if (ev.is_vertex) {
      Label v = ev.sibling, pv = ev.position;
      if (!active.empty() && v > active.back().first) {
        // p(min) < pv < min < v
        return ConflictingPair{active.back().first, pv, v};
      }
      active.push_back({v, pv});
    } else {
      Label u = ev.position, w = ev.sibling;
      if (!active.empty() && w > active.back().first) {
        // p(min) < u < min < w
        return ConflictingPair{active.back().first, u, w};
      }
    }
  }
  return std::nullopt;
}

EditList fix_vertex(const LabeledGraph& g, Label v) {
  if (v < 1 || v > g.n()) throw VertexOutOfRange("label " + std::to_string(v) + " out of range");
  if (v == 1) throw VertexIsOne();
  if (g.has_edge(v - 1, v)) return {};
  return {Edit{Edit::Insert, v - 1, v}};
}

EditList fix_edge(const LabeledGraph& g, LabelEdge e) {
  auto [u, w] = std::minmax(e.first, e.second);
  if (!g.has_edge(u, w)) {
    throw EdgeNotPresent("edge {" + std::to_string(u) + "," + std::to_string(w) + "} not in graph");
  }
  if (u == w - 1) return {};  // removal and re-insertion cancel
  EditList edits{Edit{Edit::Delete, u, w}};
  if (!g.has_edge(w - 1, w)) edits.push_back(Edit{Edit::Insert, w - 1, w});
  return edits;
}

std::pair<LabeledGraph, EditList> repair(const LabeledGraph& g) {
  if (g.directed()) throw DirectedUnsupported("repair handles undirected graphs");

  std::vector<ConflictingPair> matching = conflict_matching(g);
  if (matching.empty()) return {g, {}};

  // Greedy cover: both sides of every matched pair. Fix vertices first,
  // then edges, deduplicating inserts against the evolving edge set.
  std::set<LabelEdge> present;
  for (auto e : g.edge_labels()) present.insert(e);
  EditList edits;
  auto insert_edge = [&](Label a, Label b) {
    LabelEdge key{std::min(a, b), std::max(a, b)};
    if (present.insert(key).second) edits.push_back(Edit{Edit::Insert, key.first, key.second});
  };
  auto delete_edge = [&](Label a, Label b) {
    LabelEdge key{std::min(a, b), std::max(a, b)};
    if (present.erase(key) > 0) edits.push_back(Edit{Edit::Delete, key.first, key.second});
  };

  for (const ConflictingPair& c : matching) {
    if (c.v >= 2) insert_edge(c.v - 1, c.v);
    delete_edge(c.u, c.w);
    insert_edge(c.w - 1, c.w);
  }

  // Adjacent fixes can push a vertex up to d+2 before restoration.
  LabeledGraph fixed = apply_edits(g, edits, /*transitional=*/true);

  std::uint32_t worst = 0;
  for (VertexId v = 1; v <= fixed.n(); ++v) worst = std::max(worst, fixed.degree(v));
  if (worst > g.degree_bound()) {
    if (g.degree_bound() < 3) throw DegreeBoundTooSmall("degree restoration needs d >= 3");
    auto [reduced, more] = degree_reduce_to(fixed, g.degree_bound());
    (void)reduced;
    edits.insert(edits.end(), more.begin(), more.end());
  }
  return {apply_edits(g, edits, false, g.degree_bound()), edits};
}

namespace {

// Children lists of the p-tree, label space, ascending.
std::vector<std::vector<Label>> p_tree_children(const LabeledGraph& g,
                                                const std::vector<Label>& p) {
  std::vector<std::vector<Label>> kids(g.n() + 1);
  for (Label v = 1; v <= g.n(); ++v) kids[p[v]].push_back(v);
  return kids;  // pushed in ascending v, already sorted
}

}  // namespace

std::optional<Label> exact_dfs_next(const LabeledGraph& g, Label v) {
  std::vector<Label> p = all_parent_labels(g);
  auto kids = p_tree_children(g, p);
  if (!kids[v].empty()) return kids[v].front();
  Label cur = v;
  for (;;) {
    Label par = p[cur];
    if (par == kVirtualParent) return std::nullopt;
    const auto& sibs = kids[par];
    auto it = std::upper_bound(sibs.begin(), sibs.end(), cur);
    if (it != sibs.end()) return *it;
    cur = par;
  }
}

std::optional<Label> exact_dfs_prev(const LabeledGraph& g, Label v) {
  std::vector<Label> p = all_parent_labels(g);
  auto kids = p_tree_children(g, p);
  Label par = p[v];
  if (par == kVirtualParent) return std::nullopt;
  const auto& sibs = kids[par];
  auto it = std::lower_bound(sibs.begin(), sibs.end(), v);
  if (it == sibs.begin()) return par;
  Label w = *std::prev(it);
  while (!kids[w].empty()) w = kids[w].back();
  return w;
}

namespace {

// Label range of the graph component containing `at` (underlying
// undirected reachability).
std::pair<Label, Label> component_label_range(const LabeledGraph& g, VertexId at) {
  std::vector<bool> seen(g.n() + 1, false);
  std::vector<VertexId> queue{at};
  seen[at] = true;
  Label lo = g.label_of(at), hi = lo;
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    lo = std::min(lo, g.label_of(v));
    hi = std::max(hi, g.label_of(v));
    auto push = [&](VertexId w) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    };
    if (g.directed()) {
      for (VertexId w : g.out_neighbors(v)) push(w);
      for (VertexId w : g.in_neighbors(v)) push(w);
    } else {
      for (VertexId w : g.neighbors(v)) push(w);
    }
  }
  return {lo, hi};
}

// Largest label in the p-tree rooted at `at`'s orphan ancestor. On a valid
// numbering this is exactly where a forward walk may end.
Label p_tree_max_label(const LabeledGraph& g, Label at) {
  std::vector<Label> p = all_parent_labels(g);
  std::vector<std::vector<Label>> kids(g.n() + 1);
  for (Label v = 1; v <= g.n(); ++v) kids[p[v]].push_back(v);
  Label root = at;
  while (p[root] != kVirtualParent) root = p[root];
  Label best = root;
  std::vector<Label> stack{root};
  while (!stack.empty()) {
    Label v = stack.back();
    stack.pop_back();
    best = std::max(best, v);
    for (Label c : kids[v]) stack.push_back(c);
  }
  return best;
}

}  // namespace

bool validate_witness(const LabeledGraph& g, const Witness& w) {
  if (const auto* c = std::get_if<ConflictingPair>(&w)) {
    try {
      return is_conflicting_pair(g, c->v, {c->u, c->w});
    } catch (const EdgeNotPresent&) {
      return false;
    } catch (const VertexOutOfRange&) {
      return false;
    }
  }
  const auto& ov = std::get<OrderViolation>(w);
  if (ov.at < 1 || ov.at > g.n()) return false;
  Label lv = g.label_of(ov.at);
  if (ov.forward) {
    auto nx = exact_dfs_next(g, lv);
    if (nx.has_value()) return *nx != lv + 1;
    // End-of-component is only consistent with a valid numbering when no
    // larger label can follow.
    if (g.directed()) return p_tree_max_label(g, lv) > lv;
    return component_label_range(g, ov.at).second > lv;
  }
  auto pv = exact_dfs_prev(g, lv);
  if (pv.has_value()) return *pv != lv - 1;
  if (g.directed()) return false;  // orphan starts are unconstrained here
  return component_label_range(g, ov.at).first < lv;
}

}  // namespace dfscert
