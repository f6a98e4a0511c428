#include "dfscert/navigator.hpp"

#include <algorithm>

namespace dfscert {

namespace {

// Neighbor list of v in the direction navigation cares about: in-neighbors
// drive the parent relation, out-neighbors are the candidate children.
std::vector<VertexId> scan_neighbors(GraphOracle& o, VertexId v, Direction dir) {
  std::vector<VertexId> out;
  for (std::uint32_t i = 1; i <= o.degree_bound(); ++i) {
    auto w = o.neighbor_query(v, i, dir);
    if (!w) break;  // adjacency slots are packed, the first gap ends the list
    out.push_back(*w);
  }
  return out;
}

Direction parent_dir(const GraphOracle& o) {
  return o.directed() ? Direction::In : Direction::Undirected;
}

Direction child_dir(const GraphOracle& o) {
  return o.directed() ? Direction::Out : Direction::Undirected;
}

struct CapGuard {
  GraphOracle& o;
  std::uint64_t limit;
  bool exceeded() const { return o.used() > limit; }
};

}  // namespace

std::pair<Label, VertexId> probe_parent(GraphOracle& o, VertexId v) {
  Label lv = o.label_query(v);
  Label best = kVirtualParent;
  VertexId best_vertex = 0;
  for (VertexId w : scan_neighbors(o, v, parent_dir(o))) {
    Label lw = o.label_query(w);
    if (lw < lv && lw > best) {
      best = lw;
      best_vertex = w;
    }
  }
  return {best, best_vertex};
}

std::vector<std::pair<Label, VertexId>> tree_children(GraphOracle& o, VertexId u) {
  Label lu = o.label_query(u);
  std::vector<std::pair<Label, VertexId>> kids;
  for (VertexId w : scan_neighbors(o, u, child_dir(o))) {
    auto [pw, pv] = probe_parent(o, w);
    if (pw == lu) kids.emplace_back(o.label_query(w), w);
  }
  std::sort(kids.begin(), kids.end());
  return kids;
}

NavResult tree_next(GraphOracle& o, VertexId v, std::uint64_t call_cap) {
  CapGuard cap{o, o.used() + call_cap};

  auto kids = tree_children(o, v);
  if (!kids.empty()) return NavResult::next(kids.front().second);

  VertexId cur = v;
  Label cur_label = o.label_query(v);
  for (;;) {
    if (cap.exceeded()) return NavResult::inconsistent("per-call query cap exceeded");
    auto [pl, pv] = probe_parent(o, cur);
    if (pl == kVirtualParent) return NavResult::end_of_component();
    for (const auto& [sl, sv] : tree_children(o, pv)) {
      if (sl > cur_label) return NavResult::next(sv);  // next sibling
    }
    cur = pv;
    cur_label = pl;
  }
}

NavResult tree_prev(GraphOracle& o, VertexId v, std::uint64_t call_cap) {
  CapGuard cap{o, o.used() + call_cap};

  Label lv = o.label_query(v);
  auto [pl, pv] = probe_parent(o, v);
  if (pl == kVirtualParent) return NavResult::end_of_component();

  auto sibs = tree_children(o, pv);
  VertexId prev_sib = 0;
  Label prev_label = 0;
  for (const auto& [sl, sv] : sibs) {
    if (sl < lv) {
      prev_sib = sv;
      prev_label = sl;
    }
  }
  if (prev_sib == 0) return NavResult::next(pv);

  // Descend to the last vertex of the previous sibling's subtree. Labels
  // strictly increase along the descent, so this terminates even on junk.
  VertexId w = prev_sib;
  (void)prev_label;
  for (;;) {
    if (cap.exceeded()) return NavResult::inconsistent("per-call query cap exceeded");
    auto kids = tree_children(o, w);
    if (kids.empty()) return NavResult::next(w);
    w = kids.back().second;
  }
}

}  // namespace dfscert
